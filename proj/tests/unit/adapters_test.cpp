// Copyright 2026 The GRG Engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <atomic>
#include <functional>

#include "grg/adapters/chat_client.hpp"
#include "grg/adapters/llm_adapters.hpp"
#include "grg/adapters/vision_http.hpp"
#include "grg/common/error.hpp"
#include "local_server.hpp"

namespace grg::adapters {
namespace {

using nlohmann::json;

ErrorKind kind_of(const std::function<void()>& fn, bool* retryable = nullptr) {
  try {
    fn();
  } catch (const Error& e) {
    if (retryable) *retryable = e.retryable();
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::contract;
}

TEST(ExtractJson, FindsFirstValueInProse) {
  EXPECT_EQ(extract_json(R"({"a":1})"), json({{"a", 1}}));
  EXPECT_EQ(extract_json("Sure! ```json\n[1, 2]\n``` done"), json::array({1, 2}));
  EXPECT_EQ(extract_json("note {not json} then {\"k\": \"v\"}"), json({{"k", "v"}}));
  EXPECT_EQ(kind_of([] { extract_json("no json here"); }), ErrorKind::adapter);
}

TEST(LlmExtractor, ParseReplyCountsMalformedItems) {
  const auto r = LlmExtractor::parse_reply(
      R"([{"subject":"AMF","predicate":"selects","object":"SMF","confidence":0.7},{"subject":"x"},{"subject":"A","predicate":"p","object":"B"}])");
  ASSERT_EQ(r.triples.size(), 2u);
  EXPECT_EQ(r.malformed, 1u);
  EXPECT_DOUBLE_EQ(r.triples[0].confidence, 0.7);
  EXPECT_DOUBLE_EQ(r.triples[1].confidence, 1.0);
  EXPECT_EQ(kind_of([] { LlmExtractor::parse_reply(R"({"subject":"x"})"); }), ErrorKind::adapter);
}

HttpEndpoint endpoint(const testing::LocalServer& s, std::string path, int attempts = 3) {
  return {s.base_url(), std::move(path), "", 5, attempts};
}

TEST(PostJson, RetriesServerErrorsThenSucceeds) {
  testing::LocalServer s;
  std::atomic<int> calls{0};
  s.server().Post("/flaky", [&](const httplib::Request& req, httplib::Response& res) {
    if (++calls < 3) {
      res.status = 503;
      return;
    }
    res.set_content(json{{"echo", json::parse(req.body)}}.dump(), "application/json");
  });
  s.start();
  const auto reply = post_json(endpoint(s, "/flaky"), {{"x", 1}});
  EXPECT_EQ(reply["echo"]["x"], 1);
  EXPECT_EQ(calls.load(), 3);
}

TEST(PostJson, GivesUpRetryableAfterMaxAttempts) {
  testing::LocalServer s;
  std::atomic<int> calls{0};
  s.server().Post("/busy", [&](const httplib::Request&, httplib::Response& res) {
    ++calls;
    res.status = 429;
  });
  s.start();
  bool retryable = false;
  EXPECT_EQ(kind_of([&] { post_json(endpoint(s, "/busy", 2), json::object()); }, &retryable), ErrorKind::adapter);
  EXPECT_TRUE(retryable);
  EXPECT_EQ(calls.load(), 2);
}

TEST(PostJson, ClientErrorsAreNotRetried) {
  testing::LocalServer s;
  std::atomic<int> calls{0};
  s.server().Post("/bad", [&](const httplib::Request&, httplib::Response& res) {
    ++calls;
    res.status = 400;
    res.set_content("bad request", "text/plain");
  });
  s.server().Post("/text", [&](const httplib::Request&, httplib::Response& res) { res.set_content("<html>", "text/html"); });
  s.start();
  bool retryable = true;
  EXPECT_EQ(kind_of([&] { post_json(endpoint(s, "/bad"), json::object()); }, &retryable), ErrorKind::adapter);
  EXPECT_FALSE(retryable);
  EXPECT_EQ(calls.load(), 1);
  EXPECT_EQ(kind_of([&] { post_json(endpoint(s, "/text"), json::object()); }), ErrorKind::adapter);
}

TEST(PostJson, OnlyPlainHttpAccepted) {
  EXPECT_EQ(kind_of([] { post_json({"https://example.com", "/", "", 1, 1}, json::object()); }), ErrorKind::config);
}

TEST(PostJson, UnreachableIsRetryable) {
  testing::LocalServer s;
  s.start();
  const auto url = s.base_url();
  s.stop();
  bool retryable = false;
  EXPECT_EQ(kind_of([&] { post_json({url, "/", "", 1, 1}, json::object()); }, &retryable), ErrorKind::adapter);
  EXPECT_TRUE(retryable);
}

TEST(ChatClient, SendsMessagesAndReadsContent) {
  testing::LocalServer s;
  json seen;
  s.server().Post("/v1/chat/completions", [&](const httplib::Request& req, httplib::Response& res) {
    seen = json::parse(req.body);
    res.set_content(R"({"choices":[{"message":{"content":"The answer is C."}}],"usage":{"total_tokens":9}})",
                    "application/json");
  });
  s.start();
  ChatSettings settings;
  settings.endpoint = endpoint(s, "/v1/chat/completions");
  settings.model = "m";
  LlmGenerator gen(settings);
  const auto r = gen.generate({"sys", {{engine::BlockKind::chunk, "d#0", "ctx", 3}}, "Q?"});
  EXPECT_EQ(r.answer, "The answer is C.");
  EXPECT_EQ(r.usage["total_tokens"], 9);
  EXPECT_EQ(seen["model"], "m");
  EXPECT_EQ(seen["messages"][0]["role"], "system");
  EXPECT_NE(seen["messages"][1]["content"].get<std::string>().find("ctx"), std::string::npos);
  EXPECT_EQ(gen.name(), "llm:m");

  settings.model = "";
  EXPECT_THROW(ChatClient{settings}, Error);
}

TEST(HttpEmbedder, ReadsEmbeddingAndChecksDimension) {
  testing::LocalServer s;
  s.server().Post("/v1/embeddings", [&](const httplib::Request& req, httplib::Response& res) {
    const auto body = json::parse(req.body);
    const std::size_t n = body["input"] == "short" ? 3 : 4;
    res.set_content(json{{"data", {{{"embedding", std::vector<double>(n, 0.5)}}}}}.dump(), "application/json");
  });
  s.start();
  HttpEmbedder emb(endpoint(s, "/v1/embeddings"), "e", 4);
  EXPECT_EQ(emb.embed_raw("text"), std::vector<float>(4, 0.5f));
  EXPECT_EQ(kind_of([&] { embed::embed_text("short", emb); }), ErrorKind::adapter);
}

TEST(HttpVision, LocatorRequestAndReplies) {
  testing::LocalServer s;
  json seen;
  s.server().Post("/caption", [&](const httplib::Request& req, httplib::Response& res) {
    seen = json::parse(req.body);
    res.set_content(R"({"caption":"a diagram"})", "application/json");
  });
  s.server().Post("/ocr", [&](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"tokens":[{"text":"N2","confidence":0.8,"bbox":[1,2,3,4]}]})", "application/json");
  });
  s.start();
  const mmio::ImageInput img{"i1", "", "/data/i1.png", "png"};
  HttpCaptioner cap(endpoint(s, "/caption"));
  EXPECT_EQ(cap.caption(img), "a diagram");
  EXPECT_EQ(seen, json({{"image_id", "i1"}, {"format", "png"}, {"locator", "/data/i1.png"}}));
  HttpOcr ocr(endpoint(s, "/ocr"));
  const auto toks = ocr.read(img);
  ASSERT_EQ(toks.size(), 1u);
  EXPECT_EQ(toks[0].bbox, (mmio::BBox{1, 2, 3, 4}));
  EXPECT_EQ(image_request({"i2", "abc", "", "jpeg"})["bytes_base64"], "YWJj");
}

}  // namespace
}  // namespace grg::adapters
