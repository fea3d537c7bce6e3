#include "hifi/fetch.hpp"

#include <chrono>
#include <fstream>

#include <nlohmann/json.hpp>

#include "hifi/errors.hpp"
#include "hifi/hashing.hpp"
#include "hifi/log.hpp"
#include "hifi/urls.hpp"

namespace hifi {

using nlohmann::json;

namespace {

std::string now_iso8601() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

}  // namespace

PageStore::PageStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path PageStore::path_for(const std::string& url) const {
    return dir_ / (sha256_hex(normalize_url(url)) + ".json");
}

std::optional<StoredPage> PageStore::load(const std::string& url) const {
    auto path = path_for(url);
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("body") || !doc.at("body").is_string()) {
        throw FetchError("corrupt cache entry " + path.string() + " for " + url);
    }
    StoredPage page;
    page.url = doc.value("url", url);
    page.fetched_at = doc.value("fetched_at", "");
    page.body = doc.at("body").get<std::string>();
    return page;
}

void PageStore::save(const std::string& url, const std::string& body) {
    std::lock_guard<std::mutex> lock(write_mu_);
    auto path = path_for(url);
    if (std::filesystem::exists(path)) return;  // write-once per run
    std::filesystem::create_directories(dir_);
    json doc = {{"url", url}, {"fetched_at", now_iso8601()}, {"body", body}};
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FetchError("cannot write cache entry: " + path.string());
    out << doc.dump() << "\n";
}

void PageStore::remove(const std::string& url) {
    std::lock_guard<std::mutex> lock(write_mu_);
    std::filesystem::remove(path_for(url));
}

namespace {

class ReplayPageSource : public PageSource {
public:
    ReplayPageSource(std::shared_ptr<PageStore> store, std::shared_ptr<CallStats> stats)
        : store_(std::move(store)), stats_(std::move(stats)) {}

    std::string fetch_page(const std::string& url) override {
        if (stats_) stats_->page_fetches.fetch_add(1);
        return fetch(url);
    }

    std::string fetch_reddit_thread(const std::string& url) override {
        if (stats_) stats_->reddit_fetches.fetch_add(1);
        return fetch(url);
    }

private:
    std::string fetch(const std::string& url) {
        auto page = store_->load(url);  // corruption propagates as FetchError
        if (!page) throw FetchError("no recorded page for " + url + " in " + store_->dir().string());
        return page->body;
    }

    std::shared_ptr<PageStore> store_;
    std::shared_ptr<CallStats> stats_;
};

class CachingPageSource : public PageSource {
public:
    CachingPageSource(std::shared_ptr<PageStore> store, std::shared_ptr<RawFetcher> web,
                      std::shared_ptr<RawFetcher> reddit, std::shared_ptr<CallStats> stats)
        : store_(std::move(store)), web_(std::move(web)), reddit_(std::move(reddit)),
          stats_(std::move(stats)) {}

    std::string fetch_page(const std::string& url) override {
        if (stats_) stats_->page_fetches.fetch_add(1);
        return fetch(url, *web_);
    }

    std::string fetch_reddit_thread(const std::string& url) override {
        if (stats_) stats_->reddit_fetches.fetch_add(1);
        return fetch(url, *reddit_);
    }

private:
    std::string fetch(const std::string& url, RawFetcher& fetcher) {
        try {
            if (auto page = store_->load(url)) return page->body;
        } catch (const FetchError& e) {
            log::warn(std::string(e.what()) + "; refetching");
            store_->remove(url);
        }
        std::string body = fetcher.fetch(url);
        store_->save(url, body);
        return body;
    }

    std::shared_ptr<PageStore> store_;
    std::shared_ptr<RawFetcher> web_;
    std::shared_ptr<RawFetcher> reddit_;
    std::shared_ptr<CallStats> stats_;
};

}  // namespace

std::unique_ptr<PageSource> make_replay_page_source(std::shared_ptr<PageStore> store,
                                                    std::shared_ptr<CallStats> stats) {
    return std::make_unique<ReplayPageSource>(std::move(store), std::move(stats));
}

std::unique_ptr<PageSource> make_caching_page_source(std::shared_ptr<PageStore> store,
                                                     std::shared_ptr<RawFetcher> web,
                                                     std::shared_ptr<RawFetcher> reddit,
                                                     std::shared_ptr<CallStats> stats) {
    return std::make_unique<CachingPageSource>(std::move(store), std::move(web), std::move(reddit),
                                               std::move(stats));
}

}  // namespace hifi
