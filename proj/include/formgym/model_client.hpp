#pragma once

#include <string>

#include "formgym/agent.hpp"
#include "formgym/datagen.hpp"

namespace formgym {

/// OpenAI-compatible chat-completions endpoint. The API key is read from the
/// environment variable named by `api_key_env` at call time and never stored.
struct ModelEndpoint {
    std::string base_url;  // e.g. "https://api.example.com/v1"
    std::string model;
    std::string api_key_env = "FORMGYM_API_KEY";
    int timeout_seconds = 120;
    int max_retries = 2;
    double temperature = 0.0;
    int max_tokens = 2048;
};

/// Sends prompt text plus the screenshot as a PNG data URL.
class HttpModelClient : public ModelClient {
public:
    explicit HttpModelClient(ModelEndpoint endpoint) : endpoint_(std::move(endpoint)) {}
    std::string complete(const Prompt& prompt) override;
    std::string name() const override { return endpoint_.model; }

private:
    ModelEndpoint endpoint_;
};

/// Text-only variant used to write context documents.
class HttpTextGenerator : public TextGenerator {
public:
    explicit HttpTextGenerator(ModelEndpoint endpoint) : endpoint_(std::move(endpoint)) {}
    std::string generate(const std::string& prompt) override;

private:
    ModelEndpoint endpoint_;
};

/// Chat-completions request body; `png` may be empty for text-only requests.
std::string chat_request_body(const ModelEndpoint& endpoint, const std::string& text,
                              const std::vector<std::uint8_t>& png);
/// Assistant message text of a chat-completions response.
std::string chat_response_text(const std::string& body);

}  // namespace formgym
