#include "freecalc/json_io.hpp"

#include <json.hpp>

namespace freecalc {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON input");
    return j;
}

Rational rational_from_json(const Json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    throw ParseError("expected a rational string or integer value");
}

}  // namespace

std::pair<SequenceKind, std::vector<Rational>> parse_sequence_json(const std::string& text) {
    Json j = parse(text);
    if (!j.is_object()) throw ParseError("sequence JSON must be an object");
    SequenceKind kind;
    const char* key = nullptr;
    if (j.contains("moments")) {
        kind = SequenceKind::kMoments;
        key = "moments";
    } else if (j.contains("cumulants")) {
        kind = SequenceKind::kCumulants;
        key = "cumulants";
    } else {
        throw ParseError("sequence JSON needs a 'moments' or 'cumulants' array");
    }
    if (!j[key].is_array()) throw ParseError("sequence values must form an array");
    std::vector<Rational> values;
    for (const auto& v : j[key]) values.push_back(rational_from_json(v));
    if (j.contains("order")) {
        if (!j["order"].is_number_integer() || j["order"].get<long long>() != static_cast<long long>(values.size()))
            throw ParseError("declared order does not match the number of values");
    }
    if (values.empty()) throw ParseError("sequence must contain at least one value");
    return {kind, std::move(values)};
}

std::string sequence_json(SequenceKind kind, const std::vector<Rational>& values) {
    Json j;
    j["order"] = values.size();
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(rational_str(v));
    j[kind == SequenceKind::kMoments ? "moments" : "cumulants"] = std::move(arr);
    return dump(j);
}

MomentFunctional<Rational> parse_moment_table_json(const std::string& text) {
    Json j = parse(text);
    if (!j.is_object() || !j.contains("moments") || !j["moments"].is_array())
        throw ParseError("moment table JSON needs a 'moments' array");
    if (j.contains("scalar") && j["scalar"] != "rational")
        throw ParseError("only 'rational' moment tables are supported here");
    std::map<Word, Rational> table;
    for (const auto& entry : j["moments"]) {
        if (!entry.is_object() || !entry.contains("word") || !entry.contains("value"))
            throw ParseError("each moment entry needs 'word' and 'value'");
        Word w;
        for (const auto& l : entry["word"]) {
            if (!l.is_string()) throw ParseError("word letters must be strings");
            w.letters.push_back(l.get<std::string>());
        }
        if (w.letters.empty()) throw ParseError("moment entry word may not be empty");
        table[w] = rational_from_json(entry["value"]);
    }
    return MomentFunctional<Rational>(std::move(table));
}

std::string moment_table_json(const MomentFunctional<Rational>& phi) {
    Json j;
    j["scalar"] = "rational";
    Json arr = Json::array();
    for (const auto& [word, value] : phi.table()) {
        Json entry;
        entry["word"] = word.letters;
        entry["value"] = rational_str(value);
        arr.push_back(std::move(entry));
    }
    j["moments"] = std::move(arr);
    return dump(j);
}

Partition partition_from_json(const std::string& text) {
    Json j = parse(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("blocks"))
        throw ParseError("partition JSON needs 'n' and 'blocks'");
    std::vector<std::vector<int>> blocks;
    for (const auto& b : j["blocks"]) {
        std::vector<int> block;
        for (const auto& e : b) block.push_back(e.get<int>());
        blocks.push_back(std::move(block));
    }
    return Partition(j["n"].get<int>(), std::move(blocks));
}

std::string partition_json(const Partition& p) {
    Json j;
    j["n"] = p.n();
    Json blocks = Json::array();
    for (const auto& b : p.blocks()) blocks.push_back(b);
    j["blocks"] = std::move(blocks);
    return dump(j);
}

namespace {

template <class S>
Json freeness_json_impl(const FreenessReport<S>& report, const std::string& scalar_name) {
    Json j;
    j["check"] = "freeness";
    j["scalar"] = scalar_name;
    j["max_order"] = report.max_order;
    j["words_examined"] = report.words_examined;
    if constexpr (std::is_same_v<S, Rational>) {
        j["max_mixed_abs"] = rational_str(report.max_mixed_abs);
    } else {
        j["max_mixed_abs"] = report.max_mixed_abs;
    }
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        Json row;
        row["word"] = e.word.letters;
        if constexpr (std::is_same_v<S, Rational>) {
            row["abs"] = rational_str(e.magnitude);
        } else {
            row["abs"] = e.magnitude;
        }
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

}  // namespace

std::string freeness_report_json(const FreenessReport<Rational>& report) {
    return dump(freeness_json_impl(report, "rational"));
}

std::string freeness_report_json(const FreenessReport<Complex>& report) {
    return dump(freeness_json_impl(report, "complex"));
}

}  // namespace freecalc
