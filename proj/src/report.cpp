#include "knormal/report.hpp"

#include <algorithm>
#include <sstream>

#include "knormal/error.hpp"

namespace knormal {

using nlohmann::ordered_json;

ordered_json bigint_to_json(const BigInt& v) {
    if (auto small = to_u64(v)) return *small;
    return v.str();
}

BigInt bigint_from_json(const ordered_json& j) {
    if (j.is_number_unsigned() || j.is_number_integer()) return BigInt(j.get<std::uint64_t>());
    if (j.is_string()) return parse_bigint(j.get<std::string>());
    throw Error(Errc::invalid_argument, "expected an integer, got " + j.dump());
}

ordered_json to_json(const VerificationReport& r) {
    ordered_json j;
    j["claim_id"] = r.claim_id;
    j["q"] = r.q;
    if (r.n.size() == 1) {
        j["n"] = r.n.front();
    } else {
        j["n"] = r.n;
    }
    ordered_json inter = ordered_json::object();
    for (const auto& [k, v] : r.intermediates) inter[k] = bigint_to_json(v);
    j["intermediates"] = std::move(inter);
    j["verdict"] = std::string(verdict_name(r.verdict));
    if (!r.note.empty()) j["note"] = r.note;
    if (r.expected_failure) j["expected_failure"] = true;
    if (r.out_of_paper) j["out_of_paper"] = true;
    return j;
}

VerificationReport report_from_json(const ordered_json& j) {
    VerificationReport r;
    r.claim_id = j.at("claim_id").get<std::string>();
    r.q = j.at("q").get<std::uint64_t>();
    const auto& n = j.at("n");
    if (n.is_array()) {
        r.n = n.get<std::vector<unsigned>>();
    } else {
        r.n = {n.get<unsigned>()};
    }
    for (const auto& [k, v] : j.at("intermediates").items()) r.intermediates.emplace_back(k, bigint_from_json(v));
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict == "holds") {
        r.verdict = Verdict::holds;
    } else if (verdict == "fails") {
        r.verdict = Verdict::fails;
    } else if (verdict == "skipped") {
        r.verdict = Verdict::skipped;
    } else {
        throw Error(Errc::invalid_argument, "unknown verdict '" + verdict + "'");
    }
    r.note = j.value("note", std::string{});
    r.expected_failure = j.value("expected_failure", false);
    r.out_of_paper = j.value("out_of_paper", false);
    return r;
}

ordered_json claims_document(const std::vector<VerificationReport>& reports, std::uint64_t seed) {
    ordered_json claims = ordered_json::array();
    for (const auto& r : reports) claims.push_back(to_json(r));
    ordered_json doc;
    doc["claims"] = std::move(claims);
    doc["meta"] = {{"version", kVersion}, {"seed", seed}};
    return doc;
}

std::vector<VerificationReport> claims_from_document(const ordered_json& doc) {
    std::vector<VerificationReport> out;
    for (const auto& c : doc.at("claims")) out.push_back(report_from_json(c));
    return out;
}

std::string render_text(const std::vector<VerificationReport>& reports) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"claim", "q", "n", "verdict", "intermediates", "note"});
    for (const auto& r : reports) {
        std::string n = std::to_string(r.n.front());
        if (r.n.size() > 1) n += ".." + std::to_string(r.n.back());
        std::string inter;
        for (const auto& [k, v] : r.intermediates) {
            if (!inter.empty()) inter += ", ";
            inter += k + "=" + v.str();
        }
        std::string note = r.note;
        auto tag = [&note](const char* t) { note = note.empty() ? std::string(t) : std::string(t) + "; " + note; };
        if (r.out_of_paper) tag("out of paper");
        if (r.expected_failure) tag("expected per paper exclusion");
        rows.push_back({r.claim_id, std::to_string(r.q), n, std::string(verdict_name(r.verdict)), inter, note});
    }
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

}  // namespace knormal
