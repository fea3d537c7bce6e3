#include "hifi/reddit.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "hifi/errors.hpp"
#include "hifi/strings.hpp"

namespace hifi {

using nlohmann::json;

namespace {

RedditComment parse_comment(const json& data) {
    RedditComment c;
    c.id = data.value("id", "");
    c.score = data.value("score", 0);
    c.author = data.value("author", "[deleted]");
    c.body = data.value("body", "");
    c.created_at = static_cast<std::int64_t>(data.value("created_utc", 0.0));

    const json& replies = data.contains("replies") ? data.at("replies") : json();
    if (replies.is_object() && replies.contains("data")) {
        for (const auto& child : replies.at("data").value("children", json::array())) {
            if (child.value("kind", "") != "t1") continue;  // skip "more" stubs
            if (!child.contains("data")) continue;
            c.replies.push_back(parse_comment(child.at("data")));
        }
    }
    return c;
}

bool ranks_before(const RedditComment& a, const RedditComment& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.created_at != b.created_at) return a.created_at < b.created_at;
    return a.id < b.id;
}

std::vector<RedditComment> top_n(std::vector<RedditComment> comments, std::size_t n) {
    std::stable_sort(comments.begin(), comments.end(), ranks_before);
    if (comments.size() > n) comments.resize(n);
    return comments;
}

void render_comment(const RedditComment& comment, int depth, std::string& out) {
    if (!out.empty()) out += "\n";
    out += std::string(static_cast<std::size_t>(depth) * 2, ' ');
    out += "[" + std::to_string(comment.score) + "] " + comment.author + ": " +
           collapse_whitespace(comment.body);
    for (const auto& reply : comment.replies) render_comment(reply, depth + 1, out);
}

}  // namespace

RedditThread parse_reddit_thread(std::string_view raw_json, const std::string& url) {
    json doc = json::parse(raw_json, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) throw ParseError("unparseable reddit thread JSON: " + url);

    // Accept both the raw two-listing endpoint shape and a flat
    // {title, selftext, comments} fixture shape.
    RedditThread thread;
    thread.url = url;

    if (doc.is_object() && doc.contains("title")) {
        thread.title = doc.value("title", "");
        thread.selftext = doc.value("selftext", "");
        for (const auto& c : doc.value("comments", json::array())) {
            thread.comments.push_back(parse_comment(c));
        }
        if (thread.title.empty()) throw ThreadDeletedError("thread deleted: " + url);
        return thread;
    }

    if (!doc.is_array() || doc.empty()) throw ParseError("unexpected reddit payload shape: " + url);

    const json& submission_listing = doc.at(0);
    const json& children = submission_listing.contains("data")
                               ? submission_listing.at("data").value("children", json::array())
                               : json::array();
    if (children.empty() || !children.at(0).contains("data")) {
        throw ThreadDeletedError("thread deleted: " + url);
    }
    const json& sub = children.at(0).at("data");
    thread.title = sub.value("title", "");
    thread.selftext = sub.value("selftext", "");
    if (thread.title.empty() || sub.value("removed_by_category", "").size() > 0) {
        throw ThreadDeletedError("thread deleted: " + url);
    }

    if (doc.size() > 1 && doc.at(1).contains("data")) {
        for (const auto& child : doc.at(1).at("data").value("children", json::array())) {
            if (child.value("kind", "") != "t1" || !child.contains("data")) continue;
            thread.comments.push_back(parse_comment(child.at("data")));
        }
    }
    return thread;
}

PageDocument reconstruct_reddit_tree(const RedditThread& thread, int k, int m1, int m2,
                                     int snippet_chars) {
    auto top_level = top_n(thread.comments, static_cast<std::size_t>(k));
    for (auto& comment : top_level) {
        comment.replies = top_n(std::move(comment.replies), static_cast<std::size_t>(m1));
        for (auto& reply : comment.replies) {
            reply.replies = top_n(std::move(reply.replies), static_cast<std::size_t>(m2));
            for (auto& leaf : reply.replies) leaf.replies.clear();  // depth 2 is the floor
        }
    }

    PageDocument doc;
    doc.url = thread.url;
    doc.kind = PageKind::reddit;
    doc.title = collapse_whitespace(thread.title);

    auto max_snippet = static_cast<std::size_t>(snippet_chars);

    Section submission;
    submission.index = 0;
    submission.heading_level = 0;
    submission.heading_path = {doc.title};
    submission.content = doc.title;
    std::string selftext = collapse_whitespace(thread.selftext);
    if (!selftext.empty()) submission.content += "\n\n" + selftext;
    submission.snippet = utf8_prefix(submission.content, max_snippet);
    doc.sections.push_back(std::move(submission));

    int i = 0;
    for (const auto& comment : top_level) {
        ++i;
        Section section;
        section.index = static_cast<int>(doc.sections.size());
        section.heading_level = 1;
        section.heading_path = {doc.title, "comment " + std::to_string(i)};
        render_comment(comment, 0, section.content);
        if (section.content.empty()) continue;
        section.snippet = utf8_prefix(section.content, max_snippet);
        doc.sections.push_back(std::move(section));
    }

    doc.preview = doc.title + "\n" + doc.sections.front().snippet;
    return doc;
}

}  // namespace hifi
