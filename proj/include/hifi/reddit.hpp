#pragma once

#include <string>
#include <string_view>

#include "hifi/types.hpp"

namespace hifi {

// Parses the two-listing thread JSON a reddit ".json" endpoint returns
// (submission listing + comment listing; "more" stubs are skipped).
// Throws ThreadDeletedError when the submission is gone and ParseError on an
// unrecognizable payload.
RedditThread parse_reddit_thread(std::string_view raw_json, const std::string& url);

// Keeps the top k top-level comments, each with its top m1 replies, each of
// those with its top m2 replies; deeper levels are discarded. "Top" orders by
// score descending with earlier created_at breaking ties. Section 0 is the
// submission; each surviving top-level comment becomes one section rendered
// as "[score] author: body" lines indented 2 spaces per depth.
PageDocument reconstruct_reddit_tree(const RedditThread& thread, int k, int m1, int m2,
                                     int snippet_chars = 200);

}  // namespace hifi
