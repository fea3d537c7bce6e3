#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hifi/stats.hpp"

namespace hifi {

enum class Role { user, model };
enum class ModelTier { fast, deep };

const char* to_string(Role role);
const char* to_string(ModelTier tier);
Role role_from_string(const std::string& name);
ModelTier tier_from_string(const std::string& name);

struct ChatMessage {
    Role role = Role::user;
    std::string text;

    friend bool operator==(const ChatMessage&, const ChatMessage&) = default;
};

// Content hash of the full rendered request (tier + ordered messages). Any
// prompt change produces a new key, so stale fixtures miss loudly.
std::string request_key(ModelTier tier, const std::vector<ChatMessage>& messages);

struct ReplayFixture {
    std::string key;
    ModelTier tier = ModelTier::fast;
    std::vector<ChatMessage> messages;
    std::string response;
    nlohmann::json metadata = nlohmann::json::object();
};

// One directory, one JSON file per fixture named by its key hash. Reads are
// lock-free; writes are serialized and write-once per key.
class FixtureStore {
public:
    explicit FixtureStore(std::filesystem::path dir);

    std::optional<ReplayFixture> load(const std::string& key) const;
    void save(const ReplayFixture& fixture);
    const std::filesystem::path& dir() const { return dir_; }
    std::size_t size() const;

private:
    std::filesystem::path path_for(const std::string& key) const;

    std::filesystem::path dir_;
    std::mutex write_mu_;
};

// Provider contract for every model call in the pipeline.
class LlmClient {
public:
    virtual ~LlmClient() = default;

    // Returns the model's raw text. Throws ReplayMissError, NetworkError, or
    // ModelError depending on the implementation.
    virtual std::string complete(ModelTier tier, const std::vector<ChatMessage>& messages) = 0;
};

// Serves responses from a fixture store; unknown keys are an error and no
// network is ever touched.
class ReplayLlmClient : public LlmClient {
public:
    explicit ReplayLlmClient(std::shared_ptr<FixtureStore> store);
    std::string complete(ModelTier tier, const std::vector<ChatMessage>& messages) override;

private:
    std::shared_ptr<FixtureStore> store_;
};

// Answers from the store when the key exists, otherwise calls the live client
// and persists the fixture. Keeps record runs re-runnable without re-spending
// live calls.
class RecordLlmClient : public LlmClient {
public:
    RecordLlmClient(std::shared_ptr<LlmClient> live, std::shared_ptr<FixtureStore> store);
    std::string complete(ModelTier tier, const std::vector<ChatMessage>& messages) override;

private:
    std::shared_ptr<LlmClient> live_;
    std::shared_ptr<FixtureStore> store_;
};

// Single chokepoint the pipeline modules call: validates the message shape,
// counts calls per tier, and hosts the bounded retry for JSON-producing calls.
class Gateway {
public:
    explicit Gateway(std::shared_ptr<LlmClient> client, std::shared_ptr<CallStats> stats = nullptr);

    // pre: messages non-empty and ending with a user message. Empty responses
    // are a ModelError in every mode.
    std::string complete(ModelTier tier, const std::vector<ChatMessage>& messages);

    // complete() + extract_json_array with one retry of the identical request
    // on malformed output. nullopt when both attempts fail to parse or the
    // transport gives up; the caller applies its documented fallback.
    // Replay misses still propagate: a broken fixture store should be loud.
    std::optional<nlohmann::json> complete_json_array(ModelTier tier,
                                                      const std::vector<ChatMessage>& messages);

    CallStats* stats() { return stats_.get(); }

private:
    std::shared_ptr<LlmClient> client_;
    std::shared_ptr<CallStats> stats_;
};

}  // namespace hifi
