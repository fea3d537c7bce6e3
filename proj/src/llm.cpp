#include "hifi/llm.hpp"

#include <fstream>
#include <sstream>

#include "hifi/errors.hpp"
#include "hifi/hashing.hpp"
#include "hifi/json_extract.hpp"
#include "hifi/log.hpp"
#include "hifi/strings.hpp"

namespace hifi {

using nlohmann::json;

const char* to_string(Role role) { return role == Role::user ? "user" : "model"; }

const char* to_string(ModelTier tier) { return tier == ModelTier::fast ? "fast" : "deep"; }

Role role_from_string(const std::string& name) {
    if (name == "user") return Role::user;
    if (name == "model") return Role::model;
    throw Error("unknown role \"" + name + "\"");
}

ModelTier tier_from_string(const std::string& name) {
    if (name == "fast") return ModelTier::fast;
    if (name == "deep") return ModelTier::deep;
    throw Error("unknown tier \"" + name + "\"");
}

std::string request_key(ModelTier tier, const std::vector<ChatMessage>& messages) {
    // Unit/record separators keep adjacent fields from colliding.
    std::string canonical = std::string("tier=") + to_string(tier);
    for (const auto& m : messages) {
        canonical.push_back('\x1e');
        canonical += to_string(m.role);
        canonical.push_back('\x1f');
        canonical += m.text;
    }
    return sha256_hex(canonical);
}

FixtureStore::FixtureStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path FixtureStore::path_for(const std::string& key) const {
    return dir_ / (key + ".json");
}

std::optional<ReplayFixture> FixtureStore::load(const std::string& key) const {
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in) return std::nullopt;
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw Error("corrupt fixture " + path_for(key).string() + ": " + e.what());
    }
    ReplayFixture f;
    f.key = doc.value("key", key);
    const json& req = doc.at("request");
    f.tier = tier_from_string(req.value("tier", "fast"));
    for (const auto& m : req.value("messages", json::array())) {
        f.messages.push_back({role_from_string(m.value("role", "user")), m.value("text", "")});
    }
    f.response = doc.value("response", "");
    f.metadata = doc.value("metadata", json::object());
    return f;
}

void FixtureStore::save(const ReplayFixture& fixture) {
    std::lock_guard<std::mutex> lock(write_mu_);
    auto path = path_for(fixture.key);
    if (std::filesystem::exists(path)) return;  // write-once per key
    std::filesystem::create_directories(dir_);

    json messages = json::array();
    for (const auto& m : fixture.messages) {
        messages.push_back({{"role", to_string(m.role)}, {"text", m.text}});
    }
    json doc = {
        {"key", fixture.key},
        {"request", {{"tier", to_string(fixture.tier)}, {"messages", messages}}},
        {"response", fixture.response},
    };
    if (!fixture.metadata.empty()) doc["metadata"] = fixture.metadata;

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write fixture file: " + path.string());
    out << doc.dump(2) << "\n";
}

std::size_t FixtureStore::size() const {
    if (!std::filesystem::exists(dir_)) return 0;
    std::size_t n = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
        if (entry.path().extension() == ".json") ++n;
    }
    return n;
}

ReplayLlmClient::ReplayLlmClient(std::shared_ptr<FixtureStore> store) : store_(std::move(store)) {}

std::string ReplayLlmClient::complete(ModelTier tier, const std::vector<ChatMessage>& messages) {
    std::string key = request_key(tier, messages);
    auto fixture = store_->load(key);
    if (!fixture) {
        throw ReplayMissError("no fixture for " + std::string(to_string(tier)) + " request " + key +
                              " in " + store_->dir().string());
    }
    return fixture->response;
}

RecordLlmClient::RecordLlmClient(std::shared_ptr<LlmClient> live, std::shared_ptr<FixtureStore> store)
    : live_(std::move(live)), store_(std::move(store)) {}

std::string RecordLlmClient::complete(ModelTier tier, const std::vector<ChatMessage>& messages) {
    std::string key = request_key(tier, messages);
    if (auto fixture = store_->load(key)) return fixture->response;

    std::string response = live_->complete(tier, messages);
    ReplayFixture f;
    f.key = key;
    f.tier = tier;
    f.messages = messages;
    f.response = response;
    store_->save(f);
    return response;
}

Gateway::Gateway(std::shared_ptr<LlmClient> client, std::shared_ptr<CallStats> stats)
    : client_(std::move(client)), stats_(std::move(stats)) {}

std::string Gateway::complete(ModelTier tier, const std::vector<ChatMessage>& messages) {
    if (messages.empty()) throw ModelError("complete() requires at least one message");
    if (messages.back().role != Role::user) throw ModelError("last message must have role=user");

    if (stats_) {
        (tier == ModelTier::fast ? stats_->fast_calls : stats_->deep_calls).fetch_add(1);
    }
    std::string response = client_->complete(tier, messages);
    if (trim(response).empty()) {
        throw ModelError(std::string("empty response from ") + to_string(tier) + " tier");
    }
    return response;
}

std::optional<json> Gateway::complete_json_array(ModelTier tier,
                                                 const std::vector<ChatMessage>& messages) {
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::string response;
        try {
            response = complete(tier, messages);
        } catch (const ReplayMissError&) {
            throw;
        } catch (const Error& e) {
            log::warn(std::string("model call failed (attempt ") + std::to_string(attempt + 1) +
                      "): " + e.what());
            continue;
        }
        try {
            return extract_json_array(response);
        } catch (const JsonArrayError& e) {
            log::warn(std::string("unparseable model output (attempt ") + std::to_string(attempt + 1) +
                      "): " + e.what());
        }
    }
    return std::nullopt;
}

}  // namespace hifi
