#include <doctest.h>

#include "hifi/errors.hpp"
#include "hifi/templates.hpp"

using namespace hifi;

// The expected strings below are frozen golden bytes, written out
// independently of templates.cpp. Trailing spaces inside some lines are part
// of the contract.

TEST_CASE("golden: query-plan") {
    std::string rendered = render_template(TemplateId::query_plan, {{"USER_QUESTION", "Q"}});
    CHECK(rendered ==
          "Create an effective and concise Google search query for this question: \n"
          "Q\n"
          "Return a json list of strings for the best 1-2 search queries.");
}

TEST_CASE("golden: url-filter") {
    std::string rendered = render_template(
        TemplateId::url_filter, {{"USER_QUESTION", "Q"}, {"SEARCH_RESULT", "1. u \xE2\x80\x94 t \xE2\x80\x94 p"}});
    CHECK(rendered ==
          "What URLs from the list below would be helpful to read further to answer \n"
          "\"Q\"?\n"
          "Please return a JSON list of URL strings. Here are the urls with their \n"
          "preview content:\n"
          "\n"
          "1. u \xE2\x80\x94 t \xE2\x80\x94 p");
}

TEST_CASE("golden: chunk-filter") {
    std::string rendered = render_template(TemplateId::chunk_filter, {{"USER_QUESTION", "Q"},
                                                                      {"WEB_PREVIEW_CONTENT", "W"},
                                                                      {"SECTION_PREVIEWS", "S"}});
    CHECK(rendered ==
          "Given a webpage preview and its section titles and an opening snippet, \n"
          "help determine what sections are helpful for us to read further to \n"
          "help answer Q without having to search/research further.\n"
          "Return a JSON list of the useful section indices, sorted by most usefulness first.\n"
          "\n"
          "Example output: [3, 2, 6, 7]\n"
          "\n"
          "==================\n"
          "Webpage overview: W\n"
          "------------------\n"
          "Section previews in the page: S\n"
          "------------------\n"
          "Useful chunks:");
}

TEST_CASE("golden: draft") {
    std::string rendered =
        render_template(TemplateId::draft, {{"USER_QUESTION", "Q"}, {"WEB_CONTENT", "C"}});
    CHECK(rendered ==
          "You are a helpful and knowledgeable assistant.\n"
          "Answer the user question in a plain text in one paragraph (1-4 sentences).\n"
          "Include only the answer without any introductory phrases, conversational filler, \n"
          "or preamble.\n"
          "\n"
          "User question: Q\n"
          "-----------\n"
          "Here're extra information from Web Search, you might find helpful:\n"
          "C\n"
          "-----------\n"
          "Q");
}

TEST_CASE("golden: refine") {
    std::string rendered = render_template(TemplateId::refine, {{"VAL_EXAMPLES", "E"}});
    CHECK(rendered ==
          "Revise your answer to have a style and length similar to the \"answer\" \n"
          "in the following examples:\n"
          "E");
}

TEST_CASE("golden: citation keeps the literal [number] wording") {
    std::string rendered =
        render_template(TemplateId::citation, {{"AI_ANSWER", "A"}, {"WEB_CONTENT", "S"}});
    CHECK(rendered ==
          "Read the ANSWER and identify which SOURCES (by [number]) directly support \n"
          "the information it contains (for citations purpose).\n"
          "Only list indices of the sources that directly support the answer. \n"
          "If no sources match, return [].\n"
          "If multiple sources support the same fact, prioritize the source that is \n"
          "the most specific and direct match.\n"
          "\n"
          "Your output MUST be a single, valid JSON array of source indices.\n"
          "Example Output: [1, 4, 6]\n"
          "\n"
          "-----------\n"
          "ANSWER: A\n"
          "-----------\n"
          "SOURCES:\n"
          "S");
    CHECK(rendered.find("identify which SOURCES (by [number]) directly support") != std::string::npos);
}

TEST_CASE("golden: baseline-q") {
    CHECK(render_template(TemplateId::baseline_q, {{"USER_QUESTION", "Q"}}) ==
          "Please limit your answer to under 200 words. Q");
}

TEST_CASE("golden: draft without the web block") {
    CHECK(render_draft_without_web("Q") ==
          "You are a helpful and knowledgeable assistant.\n"
          "Answer the user question in a plain text in one paragraph (1-4 sentences).\n"
          "Include only the answer without any introductory phrases, conversational filler, \n"
          "or preamble.\n"
          "\n"
          "User question: Q");
}

TEST_CASE("render_template validates bindings") {
    CHECK_THROWS_AS(render_template(TemplateId::query_plan, {}), TemplateError);
    CHECK_THROWS_AS(render_template(TemplateId::query_plan,
                                    {{"USER_QUESTION", "Q"}, {"WEB_CONTENT", "x"}}),
                    TemplateError);
    CHECK_THROWS_AS(template_id_from_string("nope"), TemplateError);
}

TEST_CASE("render_template substitutes every occurrence in one pass") {
    // The draft template holds [USER_QUESTION] twice.
    std::string rendered =
        render_template(TemplateId::draft, {{"USER_QUESTION", "ZZ"}, {"WEB_CONTENT", "C"}});
    CHECK(rendered.find("[USER_QUESTION]") == std::string::npos);
    CHECK(rendered.find("User question: ZZ") != std::string::npos);
    CHECK(rendered.rfind("ZZ") > rendered.find("ZZ"));

    // Values containing bracket tokens are not re-substituted.
    std::string tricky =
        render_template(TemplateId::refine, {{"VAL_EXAMPLES", "literal [VAL_EXAMPLES] stays"}});
    CHECK(tricky.find("literal [VAL_EXAMPLES] stays") != std::string::npos);
}

TEST_CASE("render_template is pure") {
    auto once = render_template(TemplateId::chunk_filter, {{"USER_QUESTION", "a"},
                                                           {"WEB_PREVIEW_CONTENT", "b"},
                                                           {"SECTION_PREVIEWS", "c"}});
    auto twice = render_template(TemplateId::chunk_filter, {{"USER_QUESTION", "a"},
                                                            {"WEB_PREVIEW_CONTENT", "b"},
                                                            {"SECTION_PREVIEWS", "c"}});
    CHECK(once == twice);
}

TEST_CASE("template ids round-trip through names") {
    for (auto id : {TemplateId::query_plan, TemplateId::url_filter, TemplateId::chunk_filter,
                    TemplateId::draft, TemplateId::refine, TemplateId::citation,
                    TemplateId::baseline_q}) {
        CHECK(template_id_from_string(to_string(id)) == id);
    }
}
