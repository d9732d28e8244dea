#include "formgym/model_client.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "formgym/digest.hpp"
#include "formgym/error.hpp"

namespace formgym {

namespace {

struct SplitUrl {
    std::string origin;  // scheme://host[:port]
    std::string path;    // prefix without trailing slash
};

SplitUrl split_url(const std::string& url) {
    const auto scheme = url.find("://");
    if (scheme == std::string::npos) throw Error(ErrorCode::InvalidArgument, "model base_url needs a scheme: " + url);
    const auto slash = url.find('/', scheme + 3);
    SplitUrl out;
    out.origin = url.substr(0, slash);
    out.path = slash == std::string::npos ? "" : url.substr(slash);
    while (!out.path.empty() && out.path.back() == '/') out.path.pop_back();
    return out;
}

// POSTs the request, retrying transport errors, 429 and 5xx with backoff.
// Returns the assistant text or throws `failure`.
std::string post_chat(const ModelEndpoint& endpoint, const std::string& body, ErrorCode failure) {
    if (endpoint.base_url.empty()) throw Error(failure, "no model endpoint configured");
    const SplitUrl url = split_url(endpoint.base_url);
    httplib::Client client(url.origin);
    client.set_connection_timeout(std::min(endpoint.timeout_seconds, 30), 0);
    client.set_read_timeout(endpoint.timeout_seconds, 0);
    client.set_write_timeout(endpoint.timeout_seconds, 0);
    httplib::Headers headers;
    if (const char* key = std::getenv(endpoint.api_key_env.c_str()); key && *key) {
        headers.emplace("Authorization", std::string("Bearer ") + key);
    }
    std::string last_error;
    for (int attempt = 0; attempt <= endpoint.max_retries; ++attempt) {
        if (attempt > 0) std::this_thread::sleep_for(std::chrono::milliseconds(250 << std::min(attempt, 5)));
        auto res = client.Post(url.path + "/chat/completions", headers, body, "application/json");
        if (!res) {
            last_error = "transport error: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status == 429 || res->status >= 500) {
            last_error = "HTTP " + std::to_string(res->status);
            continue;
        }
        if (res->status != 200) {
            throw Error(failure, "HTTP " + std::to_string(res->status) + ": " + res->body.substr(0, 200));
        }
        try {
            return chat_response_text(res->body);
        } catch (const Error& e) {
            throw Error(failure, e.what());
        }
    }
    throw Error(failure, "model endpoint failed after " + std::to_string(endpoint.max_retries + 1) +
                             " attempts: " + last_error);
}

}  // namespace

std::string chat_request_body(const ModelEndpoint& endpoint, const std::string& text,
                              const std::vector<std::uint8_t>& png) {
    nlohmann::json content = nlohmann::json::array();
    content.push_back({{"type", "text"}, {"text", text}});
    if (!png.empty()) {
        content.push_back(
            {{"type", "image_url"}, {"image_url", {{"url", "data:image/png;base64," + base64_encode(png)}}}});
    }
    nlohmann::json body;
    body["model"] = endpoint.model;
    body["messages"] = nlohmann::json::array({{{"role", "user"}, {"content", content}}});
    body["temperature"] = endpoint.temperature;
    body["max_tokens"] = endpoint.max_tokens;
    return body.dump();
}

std::string chat_response_text(const std::string& body) {
    try {
        const auto j = nlohmann::json::parse(body);
        const auto& content = j.at("choices").at(0).at("message").at("content");
        if (content.is_string()) return content.get<std::string>();
        std::string out;
        for (const auto& part : content) {
            if (part.value("type", "") == "text") out += part.at("text").get<std::string>();
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::MalformedDocument, std::string("unexpected completion response: ") + e.what());
    }
}

std::string HttpModelClient::complete(const Prompt& prompt) {
    return post_chat(endpoint_, chat_request_body(endpoint_, prompt.text, prompt.png), ErrorCode::ModelUnavailable);
}

std::string HttpTextGenerator::generate(const std::string& prompt) {
    return post_chat(endpoint_, chat_request_body(endpoint_, prompt, {}), ErrorCode::GeneratorUnavailable);
}

}  // namespace formgym
