#include "chaincactus/report.hpp"

#include <sstream>
#include <stdexcept>

namespace chaincactus {

Json poly_to_json(const UniPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

UniPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
    std::vector<BigInt> c;
    for (const auto& v : j) {
        if (!v.is_string()) throw std::invalid_argument("polynomial coefficients must be decimal strings");
        BigInt b;
        if (b.set_str(v.get<std::string>(), 10) != 0) {
            throw std::invalid_argument("bad decimal coefficient '" + v.get<std::string>() + "'");
        }
        c.push_back(b);
    }
    return UniPoly(std::move(c));
}

Json spec_to_json(const ChainSpec& spec) {
    return Json{{"cycle_sizes", spec.cycle_sizes}, {"positions", spec.positions}};
}

ChainSpec spec_from_json(const Json& j) {
    ChainSpec s;
    s.cycle_sizes = j.at("cycle_sizes").get<std::vector<int>>();
    s.positions = j.at("positions").get<std::vector<int>>();
    return validate(std::move(s));
}

Json entry_to_json(const SweepEntry& e) {
    return Json{{"positions", e.positions}, {"psi", e.psi.get_str()}, {"alpha", e.alpha}, {"mis_count", e.mis_count.get_str()}};
}

Json verdict_to_json(const Verdict& v) {
    Json out{{"status", to_string(v.status)}, {"ok", v.ok()}};
    if (!v.note.empty()) out["note"] = v.note;
    if (!v.witnesses.empty()) {
        Json w = Json::array();
        for (const auto& d : v.witnesses) w.push_back(Json{{"k", d.k}, {"psi", d.psi.get_str()}, {"polynomial", poly_to_json(d.poly)}});
        out["witnesses"] = std::move(w);
    }
    if (v.counterexample) {
        const auto& c = *v.counterexample;
        out["counterexample"] = Json{{"spec", format_spec(c.spec)},
                                     {"claim", c.claim},
                                     {"k", c.k},
                                     {"smaller", poly_to_json(c.smaller)},
                                     {"larger", poly_to_json(c.larger)}};
    } else {
        out["counterexample"] = nullptr;
    }
    return out;
}

Json report_to_json(const SweepReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) entries.push_back(entry_to_json(e));
    Json ties = Json::array();
    for (const auto& group : r.interior_ties) ties.push_back(group);
    return Json{{"cycle_sizes", r.cycle_sizes},
                {"entries", std::move(entries)},
                {"min", entry_to_json(r.entries.at(r.min_index))},
                {"max", entry_to_json(r.entries.at(r.max_index))},
                {"verdicts",
                 Json{{"lemma_e1", verdict_to_json(r.lemma_e1)},
                      {"lemma_e2", verdict_to_json(r.lemma_e2)},
                      {"corollary", verdict_to_json(r.corollary)},
                      {"extremality", verdict_to_json(r.extremality)}}},
                {"interior_ties", std::move(ties)}};
}

std::string report_to_csv(const SweepReport& r) {
    std::ostringstream out;
    out << "positions,psi,alpha,mis_count\n";
    for (const auto& e : r.entries) {
        for (std::size_t i = 0; i < e.positions.size(); ++i) out << (i ? ";" : "") << e.positions[i];
        out << ',' << e.psi.get_str() << ',' << e.alpha << ',' << e.mis_count.get_str() << '\n';
    }
    return out.str();
}

} // namespace chaincactus
