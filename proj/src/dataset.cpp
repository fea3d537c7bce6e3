#include "hifi/dataset.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hifi/errors.hpp"
#include "hifi/strings.hpp"

namespace hifi {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_line(const std::string& line, std::size_t line_no, const std::string& origin) {
    json doc = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object()) {
        throw DataError(origin + ":" + std::to_string(line_no) + ": malformed JSONL line");
    }
    return doc;
}

std::string require_string(const json& doc, const char* key, std::size_t line_no,
                           const std::string& origin) {
    if (!doc.contains(key) || !doc.at(key).is_string()) {
        throw DataError(origin + ":" + std::to_string(line_no) + ": missing \"" + key + "\" string");
    }
    return doc.at(key).get<std::string>();
}

}  // namespace

std::vector<QAPair> parse_jsonl(const std::string& text, const std::string& origin) {
    std::vector<QAPair> pairs;
    std::set<std::string> seen_ids;
    std::size_t line_no = 0;
    for (const auto& line : split_lines(text)) {
        ++line_no;
        if (is_blank(line)) continue;
        json doc = parse_line(line, line_no, origin);

        QAPair pair;
        pair.question = require_string(doc, "question", line_no, origin);
        pair.answer = require_string(doc, "answer", line_no, origin);
        if (doc.contains("id")) {
            if (doc.at("id").is_string()) {
                pair.id = doc.at("id").get<std::string>();
            } else if (doc.at("id").is_number_integer()) {
                pair.id = std::to_string(doc.at("id").get<std::int64_t>());
            } else {
                throw DataError(origin + ":" + std::to_string(line_no) + ": \"id\" must be a string");
            }
        } else {
            pair.id = std::to_string(line_no);
        }
        if (!seen_ids.insert(pair.id).second) {
            throw DataError(origin + ":" + std::to_string(line_no) + ": duplicate id \"" + pair.id + "\"");
        }
        pairs.push_back(std::move(pair));
    }
    return pairs;
}

std::vector<QAPair> load_jsonl(const std::string& path) { return parse_jsonl(read_file(path), path); }

std::vector<UserQuery> load_questions_jsonl(const std::string& path) {
    std::vector<UserQuery> questions;
    std::set<std::string> seen_ids;
    std::size_t line_no = 0;
    for (const auto& line : split_lines(read_file(path))) {
        ++line_no;
        if (is_blank(line)) continue;
        json doc = parse_line(line, line_no, path);
        UserQuery q;
        q.text = require_string(doc, "question", line_no, path);
        if (doc.contains("id") && doc.at("id").is_string()) {
            q.id = doc.at("id").get<std::string>();
        } else if (doc.contains("id") && doc.at("id").is_number_integer()) {
            q.id = std::to_string(doc.at("id").get<std::int64_t>());
        } else {
            q.id = std::to_string(line_no);
        }
        if (!seen_ids.insert(q.id).second) {
            throw DataError(path + ":" + std::to_string(line_no) + ": duplicate id \"" + q.id + "\"");
        }
        questions.push_back(std::move(q));
    }
    return questions;
}

std::vector<Prediction> load_predictions_jsonl(const std::string& path) {
    std::vector<Prediction> predictions;
    std::size_t line_no = 0;
    for (const auto& line : split_lines(read_file(path))) {
        ++line_no;
        if (is_blank(line)) continue;
        json doc = parse_line(line, line_no, path);
        Prediction p;
        p.id = require_string(doc, "id", line_no, path);
        p.answer = require_string(doc, "answer", line_no, path);
        if (doc.contains("citations")) {
            if (!doc.at("citations").is_array()) {
                throw DataError(path + ":" + std::to_string(line_no) + ": \"citations\" must be an array");
            }
            for (const auto& c : doc.at("citations")) {
                if (c.is_string()) p.citations.push_back(c.get<std::string>());
            }
        }
        predictions.push_back(std::move(p));
    }
    return predictions;
}

std::string predictions_to_jsonl(const std::vector<Prediction>& predictions) {
    std::string out;
    for (const auto& p : predictions) {
        json doc = {{"id", p.id}, {"answer", p.answer}, {"citations", p.citations}};
        out += doc.dump();
        out += "\n";
    }
    return out;
}

std::vector<ExternalScore> load_external_scores_jsonl(const std::string& path) {
    std::vector<ExternalScore> scores;
    std::size_t line_no = 0;
    for (const auto& line : split_lines(read_file(path))) {
        ++line_no;
        if (is_blank(line)) continue;
        json doc = parse_line(line, line_no, path);
        ExternalScore s;
        s.id = require_string(doc, "id", line_no, path);
        if (!doc.contains("score") || !doc.at("score").is_number()) {
            throw DataError(path + ":" + std::to_string(line_no) + ": missing \"score\" number");
        }
        s.score = doc.at("score").get<double>();
        scores.push_back(std::move(s));
    }
    return scores;
}

}  // namespace hifi
