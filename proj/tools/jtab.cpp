// Command-line front end: table generation, single-entry inspection,
// equation emission, and verification runs.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jtab/io.hpp"

namespace {

using namespace jtab;

struct Options {
    int u = 0, r = 0, k = 0, l = 0;
    std::string format = "pretty";
    std::uint64_t prime = kDefaultPrime;
    int trials = 5;
    std::uint64_t seed = 0;
};

int cmd_table(const Options& o) {
    const JTable t = full_table(StableQ(o.u, o.r));
    if (o.format == "json")
        std::cout << to_json(t).dump() << '\n';
    else if (o.format == "tsv")
        std::cout << to_tsv(t);
    else
        std::cout << pretty(t);
    return 0;
}

int cmd_entry(const Options& o) {
    const StableQ q(o.u, o.r);
    const JTable t = full_table(q);
    const TableEntry& e = t.at(o.k, o.l);
    if (o.format == "json")
        std::cout << to_json(e).dump() << '\n';
    else if (o.format == "tsv")
        std::cout << to_tsv(e) << '\n';
    else
        std::cout << pretty(e, q);
    return 0;
}

int cmd_equations(const Options& o) {
    const StableQ q(o.u, o.r);
    const auto gens = equation_set(q, {o.k, o.l});
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& g : gens) arr.push_back(to_json(g));
        std::cout << arr.dump() << '\n';
    } else {
        for (const auto& g : gens) std::cout << g.str() << '\n';
    }
    return 0;
}

// Per cell: closed form vs corank route, matrix oracle on sampled points,
// D(entry) = Q; then a completeness sweep over unconstrained samples.
int cmd_verify(const Options& o) {
    const StableQ q(o.u, o.r);
    if (o.prime < (std::uint64_t(1) << 31)) {
        std::cerr << "error: verification needs a prime >= 2^31\n";
        return 2;
    }
    const JTable t = full_table(q);
    int failures = 0;
    auto mark = [&failures](bool ok) -> const char* {
        if (!ok) ++failures;
        return ok ? "ok" : "FAIL";
    };
    for (const TableEntry& e : t.entries()) {
        const bool closed_ok = closed_form_partition(q, e.index) == e.partition;

        bool corank_ok = true;
        std::vector<Partition> observed;
        for (int trial = 0; trial < o.trials; ++trial) {
            const auto asn = sample_point(q, e.index, o.seed + std::uint64_t(trial), o.prime);
            const ModMatrix m = build_matrix(asn, q);
            observed.push_back(jordan_type_of(m));
            corank_ok = corank_ok && corank_profile(m) == e.coranks.values;
        }
        bool oracle_ok = false;
        for (const Partition& cand : observed) {
            bool maximal = true;
            for (const Partition& p : observed)
                maximal = maximal && dominance_leq(p, cand) == Dominance::less_or_equal;
            if (maximal) {
                oracle_ok = cand == e.partition;
                break;
            }
        }
        const bool d_ok = d_oracle(e.partition, o.trials, o.seed, o.prime) == q.partition();

        std::cout << "(k=" << e.index.k << ",l=" << e.index.l << ") partition="
                  << e.partition.str() << " case=" << to_char(e.case_path)
                  << " closed-form=" << mark(closed_ok) << " oracle=" << mark(oracle_ok && corank_ok)
                  << " d=" << mark(d_ok) << '\n';
    }

    std::map<std::vector<int>, const TableEntry*> by_partition;
    for (const TableEntry& e : t.entries()) by_partition[e.partition.parts()] = &e;
    const int sweep = 200;
    int matched = 0, violations = 0;
    for (int i = 0; i < sweep; ++i) {
        const auto asn = random_assignment(q, o.seed + std::uint64_t(i), o.prime);
        const Partition type = jordan_type_of(build_matrix(asn, q));
        const auto it = by_partition.find(type.parts());
        if (it == by_partition.end()) continue;
        ++matched;
        for (const auto& gen : equation_set(q, it->second->index))
            if (evaluate(gen, asn) != 0) ++violations;
    }
    std::cout << "sweep: " << sweep << " samples, " << matched
              << " matched a table entry, " << violations << " equation violations\n";
    if (violations) ++failures;

    if (failures) {
        std::cout << "RESULT: FAIL (" << failures << " failures)\n";
        return 1;
    }
    std::cout << "RESULT: PASS (" << t.entries().size() << " cells)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tables of Jordan types whose generic commuting nilpotent type is Q = (u, u-r)"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&o](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"pretty", "json", "tsv"}))
            ->capture_default_str();
    };

    CLI::App* table = app.add_subcommand("table", "Print the full (r-1) x (u-r) table");
    table->add_option("u", o.u, "Largest part of Q")->required();
    table->add_option("r", o.r, "Gap of Q = (u, u-r)")->required();
    add_format(table);

    CLI::App* entry = app.add_subcommand("entry", "Print one table entry");
    entry->add_option("u", o.u)->required();
    entry->add_option("r", o.r)->required();
    entry->add_option("k", o.k)->required();
    entry->add_option("l", o.l)->required();
    add_format(entry);

    CLI::App* equations = app.add_subcommand("equations", "Print the generator set of a cell");
    equations->add_option("u", o.u)->required();
    equations->add_option("r", o.r)->required();
    equations->add_option("k", o.k)->required();
    equations->add_option("l", o.l)->required();
    add_format(equations);

    CLI::App* verify = app.add_subcommand("verify", "Verify the table against the matrix oracles");
    verify->add_option("u", o.u)->required();
    verify->add_option("r", o.r)->required();
    verify->add_option("--trials", o.trials, "Samples per cell")->capture_default_str();
    verify->add_option("--seed", o.seed, "Base seed")->capture_default_str();
    verify->add_option("--prime", o.prime, "Working prime")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*table) return cmd_table(o);
        if (*entry) return cmd_entry(o);
        if (*equations) return cmd_equations(o);
        if (*verify) return cmd_verify(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
