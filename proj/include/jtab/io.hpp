#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "jtab/equations.hpp"
#include "jtab/linalg.hpp"
#include "jtab/table.hpp"

namespace jtab {

using json = nlohmann::ordered_json;

inline json to_json(const Partition& p) { return json(p.parts()); }

inline Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

inline json to_json(const CorankSequence& c) {
    return json{{"u", c.u}, {"r", c.r}, {"k", c.k}, {"l", c.l}, {"coranks", c.values}};
}

inline CorankSequence corank_sequence_from_json(const json& j) {
    return CorankSequence{j.at("u").get<int>(), j.at("r").get<int>(), j.at("k").get<int>(),
                          j.at("l").get<int>(), j.at("coranks").get<std::vector<int>>()};
}

inline json to_json(const TypeSet& t) {
    json arr = json::array();
    if (t.a) arr.push_back("A");
    if (t.b) arr.push_back("B");
    if (t.c) arr.push_back("C");
    return arr;
}

inline json to_json(const TableEntry& e) {
    json chains{{"top", e.u_chains.top},
                {"middle", e.u_chains.middle ? json(*e.u_chains.middle) : json(nullptr)},
                {"bottom", e.u_chains.bottom}};
    return json{{"k", e.index.k},
                {"l", e.index.l},
                {"partition", e.partition.parts()},
                {"case", std::string(1, to_char(e.case_path))},
                {"types", to_json(e.types)},
                {"burge", e.burge},
                {"coranks", e.coranks.values},
                {"u_chains", chains}};
}

inline json to_json(const JTable& t) {
    json entries = json::array();
    for (const TableEntry& e : t.entries()) entries.push_back(to_json(e));
    return json{{"u", t.q().u}, {"r", t.q().r}, {"entries", entries}};
}

inline TableEntry table_entry_from_json(const json& j, const StableQ& q) {
    TableEntry e;
    e.index = {j.at("k").get<int>(), j.at("l").get<int>()};
    e.partition = partition_from_json(j.at("partition"));
    const std::string cs = j.at("case").get<std::string>();
    if (cs == "A") e.case_path = CasePath::A;
    else if (cs == "B") e.case_path = CasePath::B;
    else if (cs == "C") e.case_path = CasePath::C;
    else throw std::invalid_argument("bad case letter: " + cs);
    for (const auto& s : j.at("types")) {
        const std::string v = s.get<std::string>();
        if (v == "A") e.types.a = true;
        else if (v == "B") e.types.b = true;
        else if (v == "C") e.types.c = true;
        else throw std::invalid_argument("bad type letter: " + v);
    }
    e.burge = j.at("burge").get<std::string>();
    e.coranks = CorankSequence{q.u, q.r, e.index.k, e.index.l,
                               j.at("coranks").get<std::vector<int>>()};
    const json& ch = j.at("u_chains");
    e.u_chains.top = ch.at("top").get<int>();
    e.u_chains.bottom = ch.at("bottom").get<int>();
    if (!ch.at("middle").is_null()) e.u_chains.middle = ch.at("middle").get<int>();
    return e;
}

inline JTable table_from_json(const json& j) {
    const StableQ q(j.at("u").get<int>(), j.at("r").get<int>());
    std::vector<TableEntry> entries;
    for (const auto& ej : j.at("entries")) entries.push_back(table_entry_from_json(ej, q));
    return JTable(q, std::move(entries));
}

inline std::string comma_joined(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

// k, l, partition, case, types, burge, coranks, top, middle, bottom
inline std::string to_tsv(const TableEntry& e) {
    std::ostringstream os;
    os << e.index.k << '\t' << e.index.l << '\t' << comma_joined(e.partition.parts()) << '\t'
       << to_char(e.case_path) << '\t' << e.types.str() << '\t' << e.burge << '\t'
       << comma_joined(e.coranks.values) << '\t' << e.u_chains.top << '\t';
    if (e.u_chains.middle) os << *e.u_chains.middle;
    else os << '-';
    os << '\t' << e.u_chains.bottom;
    return os.str();
}

inline std::string to_tsv(const JTable& t) {
    std::string out;
    for (const TableEntry& e : t.entries()) {
        out += to_tsv(e);
        out += '\n';
    }
    return out;
}

inline std::string pretty(const JTable& t) {
    const int cols = t.q().u - t.q().r;
    std::size_t width = 8;
    for (const TableEntry& e : t.entries())
        width = std::max(width, e.partition.str().size() + 2);
    std::ostringstream os;
    os << "Q = " << t.q().partition().str() << "   [u = " << t.q().u << ", r = " << t.q().r
       << ", " << (t.q().r - 1) << " x " << cols << " table]\n";
    os << "k\\l";
    for (int l = 1; l <= cols; ++l) {
        std::string h = std::to_string(l);
        os << std::string(width - h.size(), ' ') << h;
    }
    os << '\n';
    for (int k = 1; k <= t.q().r - 1; ++k) {
        os << k << "  ";
        for (int l = 1; l <= cols; ++l) {
            const std::string cell = t.at(k, l).partition.str();
            os << std::string(width - cell.size(), ' ') << cell;
        }
        os << '\n';
    }
    return os.str();
}

inline std::string pretty(const TableEntry& e, const StableQ& q) {
    std::ostringstream os;
    os << "Q = " << q.partition().str() << "  (k,l) = (" << e.index.k << ',' << e.index.l
       << ")\n";
    os << "partition: " << e.partition.str() << '\n';
    os << "case:      " << to_char(e.case_path) << '\n';
    os << "types:     " << e.types.str() << '\n';
    os << "burge:     " << e.burge << '\n';
    os << "coranks:   " << comma_joined(e.coranks.values) << '\n';
    os << "u-chains:  top=" << e.u_chains.top;
    if (e.u_chains.middle) os << " middle=" << *e.u_chains.middle;
    os << " bottom=" << e.u_chains.bottom << '\n';
    return os.str();
}

// term list [{"c": 1, "vars": ["a2", "b2"]}, ...]
inline json to_json(const PolyGenerator& g) {
    json arr = json::array();
    for (const Term& t : g.terms) {
        json vars = json::array();
        for (const Var& v : t.vars) vars.push_back(v.str());
        arr.push_back(json{{"c", t.coeff}, {"vars", vars}});
    }
    return arr;
}

// TSV dump of raw entries for external cross-checking.
inline std::string matrix_tsv(const ModMatrix& m) {
    std::string out;
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j) out += '\t';
            out += std::to_string(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace jtab
