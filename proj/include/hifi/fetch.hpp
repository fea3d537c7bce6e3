#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "hifi/stats.hpp"

namespace hifi {

struct StoredPage {
    std::string url;
    std::string fetched_at;  // ISO-8601, informational only
    std::string body;
};

// On-disk store of raw fetch bodies: one {sha256(normalized url)}.json file
// per URL containing {url, fetched_at, body}. Doubles as the live-mode cache
// and the replay-mode fixture corpus.
class PageStore {
public:
    explicit PageStore(std::filesystem::path dir);

    // nullopt on absence; throws FetchError on a corrupt entry.
    std::optional<StoredPage> load(const std::string& url) const;
    void save(const std::string& url, const std::string& body);
    void remove(const std::string& url);
    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path path_for(const std::string& url) const;

    std::filesystem::path dir_;
    std::mutex write_mu_;
};

// Live transport for one document kind (web scrape or reddit thread).
class RawFetcher {
public:
    virtual ~RawFetcher() = default;
    // Returns the raw body. Throws FetchError / ThreadDeletedError / NetworkError.
    virtual std::string fetch(const std::string& url) = 0;
};

// Raw-document source the ingestor consumes. fetch_page returns HTML;
// fetch_reddit_thread returns the thread JSON.
class PageSource {
public:
    virtual ~PageSource() = default;
    virtual std::string fetch_page(const std::string& url) = 0;
    virtual std::string fetch_reddit_thread(const std::string& url) = 0;
};

// Store-only source: a miss or a corrupt entry is an error and no network is
// ever touched.
std::unique_ptr<PageSource> make_replay_page_source(std::shared_ptr<PageStore> store,
                                                    std::shared_ptr<CallStats> stats = nullptr);

// Cache-first source: hits are served from the store, misses go to the live
// fetchers and are written back once. Corrupt entries are refetched.
std::unique_ptr<PageSource> make_caching_page_source(std::shared_ptr<PageStore> store,
                                                     std::shared_ptr<RawFetcher> web,
                                                     std::shared_ptr<RawFetcher> reddit,
                                                     std::shared_ptr<CallStats> stats = nullptr);

}  // namespace hifi
