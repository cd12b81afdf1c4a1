// charlat: character tables, orders Z[G] inside Z_K, and quotient reports.
// Subcommands: table, quotient, an, scan. Exit codes: 0 success, 1 theorem
// or regression violation, 2 input error, 3 resource ceiling.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "charlat/dixon.hpp"
#include "charlat/families.hpp"
#include "charlat/multiquad.hpp"
#include "charlat/orders.hpp"

using json = nlohmann::ordered_json;
using namespace charlat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// TableDocument JSON

json table_to_doc(const CharacterTable& t, const std::string& name,
                  const std::string& note) {
    json doc;
    doc["schema_version"] = 1;
    doc["name"] = name;
    doc["group_order"] = t.group_order.get_str();
    doc["class_sizes"] = json::array();
    for (const auto& s : t.classes.sizes) doc["class_sizes"].push_back(s.get_str());
    doc["element_orders"] = t.classes.element_orders;
    if (!t.classes.power_maps.empty()) {
        doc["power_maps"] = json::array();
        for (const auto& pm : t.classes.power_maps) doc["power_maps"].push_back(pm);
    }
    doc["values"] = json::array();
    for (const auto& row : t.values) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.to_string());
        doc["values"].push_back(std::move(r));
    }
    doc["provenance"] = note;
    return doc;
}

CharacterTable doc_to_table(const json& doc) {
    try {
        if (doc.at("schema_version").get<int>() != 1)
            throw InputError("table document: unsupported schema_version");
        CharacterTable t;
        t.group_order = Int(doc.at("group_order").get<std::string>());
        for (const auto& s : doc.at("class_sizes"))
            t.classes.sizes.push_back(Int(s.get<std::string>()));
        t.classes.element_orders = doc.at("element_orders").get<std::vector<long>>();
        t.classes.exponent = 1;
        for (long o : t.classes.element_orders)
            t.classes.exponent = std::lcm(t.classes.exponent, o);
        if (doc.contains("power_maps")) {
            for (const auto& pm : doc.at("power_maps"))
                t.classes.power_maps.push_back(pm.get<std::vector<long>>());
            if (t.classes.power_maps.size() !=
                static_cast<std::size_t>(t.classes.exponent))
                throw InputError("table document: power_maps rows != exponent");
        } else {
            std::cerr << "warning: no power maps in document; dependent checks skipped\n";
        }
        for (const auto& row : doc.at("values")) {
            std::vector<Cyclotomic> r;
            for (const auto& v : row) r.push_back(parse_cyclo(v.get<std::string>()));
            t.values.push_back(std::move(r));
        }
        validate_table(t);
        return t;
    } catch (const json::exception& e) {
        throw InputError(std::string("table document: ") + e.what());
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

PermGroup perm_group_from_doc(const json& doc) {
    try {
        long degree = doc.at("degree").get<long>();
        PermGroup g;
        g.degree = degree;
        for (const auto& gen : doc.at("generators")) {
            if (gen.is_string())
                g.generators.push_back(Perm::from_cycles(gen.get<std::string>(), degree));
            else
                g.generators.push_back(Perm(gen.get<std::vector<long>>()));
        }
        if (g.generators.empty()) throw InputError("permutation group: no generators");
        return g;
    } catch (const json::exception& e) {
        throw InputError(std::string("permutation group document: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// sources

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) out.push_back(part);
    return out;
}

long parse_long(const std::string& s) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw InputError("not an integer: " + s);
        return v;
    } catch (const std::logic_error&) {
        throw InputError("not an integer: " + s);
    }
}

struct Source {
    std::string name;
    std::optional<CharacterTable> table;          // absent for generator-only sources
    std::optional<PermGroup> group;               // present when enumerable
    std::optional<std::vector<Cyclotomic>> gens;  // ring generators (extraspecial)
    Int group_order = 0;
    bool nilpotent = false;
};

Source family_source(const std::string& spec) {
    auto parts = split(spec, ':');
    Source s;
    s.name = "family:" + spec;
    const std::string& kind = parts[0];
    if (kind == "abelian") {
        if (parts.size() != 2) throw InputError("family:abelian:<n1,n2,...>");
        std::vector<long> factors;
        for (const auto& f : split(parts[1], ',')) factors.push_back(parse_long(f));
        s.table = abelian_table(factors);
        s.nilpotent = true;
    } else if (kind == "dihedral") {
        if (parts.size() != 2) throw InputError("family:dihedral:<m>");
        long m = parse_long(parts[1]);
        s.table = dihedral_table(m);
        s.group = dihedral_group(m);
        s.nilpotent = (m & (m - 1)) == 0;
    } else if (kind == "quaternion") {
        s.group = quaternion_group();
        s.table = dixon_table(*s.group);
        s.nilpotent = true;
    } else if (kind == "c4c4xc3") {
        s.group = c4c4_c3_group();
        s.table = dixon_table(*s.group);
    } else if (kind == "c15d16") {
        s.group = c15_d16_group();
        s.table = dixon_table(*s.group);
    } else if (kind == "c15d16alt") {
        s.group = c15_d16_group_alt();
        s.table = dixon_table(*s.group);
    } else if (kind == "psl2") {
        if (parts.size() != 2) throw InputError("family:psl2:<q>");
        s.group = psl2_group(parse_long(parts[1]));
        s.table = dixon_table(*s.group);
    } else if (kind == "psl33") {
        s.group = psl33_group();
        s.table = dixon_table(*s.group);
    } else if (kind == "d26xc3") {
        s.table = direct_product_table(dihedral_table(13), abelian_table({3}));
    } else if (kind == "extraspecial") {
        if (parts.size() != 3) throw InputError("family:extraspecial:<p>:<n>");
        ExtraspecialData e = extraspecial_central_order(parse_long(parts[1]),
                                                        parse_long(parts[2]));
        s.gens = e.generators;
        s.group_order = e.group_order;
        s.nilpotent = true;
    } else {
        throw InputError("unknown family: " + kind);
    }
    if (s.table) s.group_order = s.table->group_order;
    return s;
}

Source parse_source(const std::string& spec) {
    auto colon = spec.find(':');
    std::string scheme = colon == std::string::npos ? spec : spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (scheme == "family") return family_source(rest);
    if (scheme == "dihedral" || scheme == "abelian" || scheme == "psl2" ||
        scheme == "extraspecial")
        return family_source(spec);
    if (scheme == "quaternion" || scheme == "c4c4xc3" || scheme == "c15d16" ||
        scheme == "c15d16alt" || scheme == "psl33" || scheme == "d26xc3")
        return family_source(spec);
    if (scheme == "perm") {
        Source s;
        s.name = spec;
        s.group = perm_group_from_doc(load_json_file(rest));
        s.table = dixon_table(*s.group);
        s.group_order = s.table->group_order;
        return s;
    }
    if (scheme == "json") {
        Source s;
        s.name = spec;
        try {
            s.table = doc_to_table(load_json_file(rest));
        } catch (const TableValidationError& e) {
            throw InputError(rest + ": " + e.what());
        }
        s.group_order = s.table->group_order;
        return s;
    }
    throw InputError("unknown source: " + spec);
}

// ---------------------------------------------------------------------------
// rendering

std::string divisor_string(const std::vector<Int>& divisors, const char* prefix = "C_") {
    if (divisors.empty()) return "trivial";
    std::ostringstream out;
    std::size_t i = 0;
    bool first = true;
    while (i < divisors.size()) {
        std::size_t j = i;
        while (j < divisors.size() && divisors[j] == divisors[i]) ++j;
        if (!first) out << " x ";
        first = false;
        out << prefix << divisors[i].get_str();
        if (j - i > 1) out << "^" << (j - i);
        i = j;
    }
    return out.str();
}

void emit(const json& doc, const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << doc.dump(2) << "\n";
}

json report_to_json(const OrderReport& r) {
    json j;
    j["field"] = {{"conductor", r.field.conductor},
                  {"stabilizer", r.field.stab},
                  {"degree", r.field.degree()}};
    j["zk_rank"] = r.zk_rank;
    j["order_index"] = r.order_index.get_str();
    j["divisors"] = json::array();
    for (const auto& d : r.divisors) j["divisors"].push_back(d.get_str());
    j["exponent"] = r.exponent.get_str();
    j["closure_rounds"] = r.closure_rounds;
    j["closure_beyond_span"] = r.closure_beyond_span;
    return j;
}

// ---------------------------------------------------------------------------
// A_n reference rows (nontrivial elementary divisors, ascending)

std::vector<Int> an_reference(long n) {
    auto rep = [](std::initializer_list<std::pair<long, int>> spec) {
        std::vector<Int> out;
        for (auto [d, m] : spec) out.insert(out.end(), m, Int(d));
        return out;
    };
    if (n <= 11) return {};
    switch (n) {
        case 12: case 13: case 14: return rep({{3, 4}});
        case 15: return rep({{3, 4}, {15, 4}, {45, 4}});
        case 16: return rep({{3, 4}, {15, 4}});
        case 17: return rep({{3, 12}, {9, 4}, {45, 4}, {135, 4}});
        case 18: return rep({{3, 8}, {15, 8}, {45, 8}});
        case 19: return rep({{3, 8}, {15, 8}});
        case 20: return rep({{3, 36}, {9, 12}, {45, 32}, {10395, 28}, {31185, 4}});
        case 21: return rep({{3, 36}, {105, 4}, {315, 12}});
        case 22: return rep({{3, 52}, {105, 8}, {315, 52}, {945, 4}});
        case 23: return rep({{3, 64}, {4095, 32}});
        case 24: return {};
        case 25: return rep({{3, 32}, {15, 32}, {315, 32}});
        case 26: return rep({{3, 38}, {15, 40}, {45, 40}, {315, 56}, {945, 8}});
        case 27: return rep({{3, 112}, {9, 112}, {27, 16}});
        case 28: return rep({{3, 96}, {15, 80}, {45, 48}});
        case 29: return rep({{3, 224}, {15, 128}});
        case 30: return rep({{3, 128}, {105, 128}});
        case 31: return rep({{3, 256}});
        default: throw InputError("an: n out of range 2..31");
    }
}

// ---------------------------------------------------------------------------
// commands

int cmd_table(const std::string& source, const std::string& json_path) {
    Source s = parse_source(source);
    if (!s.table) throw InputError(source + " has no character table");
    CharacterTable t = canonical_table(*s.table);
    std::cout << s.name << ": order " << t.group_order.get_str() << ", "
              << t.cols() << " classes, exponent " << t.classes.exponent << "\n";
    std::cout << "sizes:";
    for (const auto& z : t.classes.sizes) std::cout << " " << z.get_str();
    std::cout << "\norders:";
    for (long o : t.classes.element_orders) std::cout << " " << o;
    std::cout << "\n";
    for (const auto& row : t.values) {
        bool first = true;
        for (const auto& v : row) {
            std::cout << (first ? "" : " | ") << v.to_string();
            first = false;
        }
        std::cout << "\n";
    }
    emit(table_to_doc(t, s.name, "generated by charlat table"), json_path);
    return kExitOk;
}

OrderReport source_report(const Source& s) {
    if (s.gens) return order_report_for_values(*s.gens);
    if (s.table) return group_order_report(*s.table);
    throw InputError(s.name + " supports no order report");
}

int cmd_quotient(const std::string& source, const std::string& json_path) {
    Source s = parse_source(source);
    OrderReport r = source_report(s);
    auto witness = check_theorem_A(r, s.group_order);
    bool conj_c = s.group_order > 1 && check_conjecture_C(r, s.group_order);
    std::cout << s.name << ": Z_K/Z[G] = " << divisor_string(r.divisors) << "\n";
    std::cout << "  K: conductor " << r.field.conductor << ", degree "
              << r.field.degree() << "; index " << r.order_index.get_str()
              << "; exponent " << r.exponent.get_str() << "\n";
    std::cout << "  theorem A: " << (witness ? "VIOLATED (prime " + witness->get_str() + ")"
                                             : "ok")
              << "; conjecture C: " << (conj_c ? "ok" : "FAILS") << "\n";
    json doc;
    doc["name"] = s.name;
    doc["group_order"] = s.group_order.get_str();
    doc["report"] = report_to_json(r);
    doc["checks"] = {{"theorem_A", !witness.has_value()},
                     {"conjecture_C", conj_c},
                     {"cor_exponent", check_cor_exponent(r, s.group_order)}};
    if (witness) doc["checks"]["theorem_A_witness"] = witness->get_str();
    emit(doc, json_path);
    return witness ? kExitViolation : kExitOk;
}

int cmd_an(long n, bool paper_table, long hnf_ceiling, const std::string& json_path) {
    if (n < 2 || n > 31) throw InputError("an: n out of range 2..31");
    std::vector<long> rows;
    if (paper_table)
        for (long i = 2; i <= n; ++i) rows.push_back(i);
    else
        rows.push_back(n);
    bool mismatch = false;
    json doc = json::array();
    for (long i : rows) {
        SquareClassSpace v = an_field_basis(i);
        long rank = 1L << v.basis.size();
        if (rank > hnf_ceiling) {
            std::cout << "A_" << i << ": skipped (rank " << rank
                      << " exceeds hnf ceiling " << hnf_ceiling << ")\n";
            throw ResourceError("an: hnf ceiling exceeded");
        }
        std::vector<Int> got = an_quotient(i);
        std::vector<Int> want = an_reference(i);
        bool ok = got == want;
        mismatch = mismatch || !ok;
        std::cout << "A_" << i << ": " << divisor_string(got, "") ;
        if (!ok)
            std::cout << "   MISMATCH, reference " << divisor_string(want, "");
        std::cout << "\n";
        json row;
        row["n"] = i;
        row["divisors"] = json::array();
        for (const auto& d : got) row["divisors"].push_back(d.get_str());
        row["matches_reference"] = ok;
        doc.push_back(std::move(row));
    }
    emit(doc, json_path);
    return mismatch ? kExitViolation : kExitOk;
}

std::vector<std::string> builtin_corpus() {
    std::vector<std::string> out = {
        "family:abelian:2", "family:abelian:3", "family:abelian:2,2",
        "family:abelian:2,4", "family:abelian:3,9", "family:abelian:12",
        "family:abelian:120", "family:abelian:4,4,3",
    };
    for (long m = 3; m <= 20; ++m) out.push_back("family:dihedral:" + std::to_string(m));
    out.push_back("family:quaternion");
    out.push_back("family:c4c4xc3");
    out.push_back("family:c15d16");
    out.push_back("family:d26xc3");
    for (long q : {4, 5, 7, 8, 9}) out.push_back("family:psl2:" + std::to_string(q));
    out.push_back("family:psl33");
    for (auto [p, k] : {std::pair{3, 1}, {3, 2}, {5, 1}, {7, 1}})
        out.push_back("family:extraspecial:" + std::to_string(p) + ":" + std::to_string(k));
    return out;
}

struct ScanResult {
    json line;
    bool theorem_violation = false;
    bool conjecture_counterexample = false;
    bool entry_error = false;
};

ScanResult scan_entry(const std::string& spec, const std::set<std::string>& checks) {
    ScanResult res;
    res.line["source"] = spec;
    try {
        Source s = parse_source(spec);
        OrderReport r = source_report(s);
        res.line["group_order"] = s.group_order.get_str();
        res.line["divisors"] = divisor_string(r.divisors);
        if (checks.count("A")) {
            auto witness = check_theorem_A(r, s.group_order);
            res.line["theorem_A"] = !witness.has_value();
            if (witness) {
                res.line["theorem_A_witness"] = witness->get_str();
                res.theorem_violation = true;
            }
        }
        if (checks.count("C") && s.group_order > 1) {
            bool ok = check_conjecture_C(r, s.group_order);
            res.line["conjecture_C"] = ok;
            if (!ok) {
                // Theorem B instance for nilpotent members: build-breaking
                if (s.nilpotent) res.theorem_violation = true;
                else res.conjecture_counterexample = true;
            }
        }
        bool want_cols = checks.count("qg") || checks.count("navarro");
        if (want_cols && s.group && s.table) {
            const CharacterTable& t = *s.table;
            bool qg_all = true, nav_all = true;
            for (std::size_t j = 0; j < t.cols(); ++j) {
                ColumnOrder c = column_order(t, j);
                NormalizerData nd = cyclic_normalizer_data(*s.group, t.classes.reps.at(j));
                if (checks.count("qg") &&
                    !check_qg_bound(c, nd.normalizer_order / Int(nd.cyclic_order)))
                    qg_all = false;
                if (checks.count("navarro")) {
                    Int lhs = nd.normalizer_order / nd.centralizer_order;
                    Int rhs = Int(euler_phi_l(nd.cyclic_order)) / Int(c.field.degree());
                    if (lhs != rhs) nav_all = false;
                }
            }
            if (checks.count("qg")) {
                res.line["qg"] = qg_all;
                if (!qg_all) res.theorem_violation = true;
            }
            if (checks.count("navarro")) {
                res.line["navarro"] = nav_all;
                if (!nav_all) res.theorem_violation = true;
            }
        } else if (want_cols) {
            res.line["column_checks"] = "skipped (no permutation group)";
        }
    } catch (const std::exception& e) {
        res.line["error"] = e.what();
        res.entry_error = true;
    }
    return res;
}

int cmd_scan(const std::string& corpus_path, std::vector<std::string> checks_in,
             long threads, const Int& max_order, const std::string& json_path) {
    std::set<std::string> checks(checks_in.begin(), checks_in.end());
    if (checks.empty()) checks = {"A", "C"};
    for (const auto& c : checks)
        if (c != "A" && c != "C" && c != "qg" && c != "navarro")
            throw InputError("unknown check: " + c);
    std::vector<std::string> entries;
    if (corpus_path.empty()) {
        entries = builtin_corpus();
    } else {
        json doc = load_json_file(corpus_path);
        try {
            entries = doc.at("entries").get<std::vector<std::string>>();
        } catch (const json::exception& e) {
            throw InputError(corpus_path + ": " + e.what());
        }
    }
    std::vector<ScanResult> results(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= entries.size()) break;
            results[i] = scan_entry(entries[i], checks);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (long i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    long violations = 0, counterexamples = 0, errors = 0, skipped = 0;
    json lines = json::array();
    for (auto& r : results) {
        if (r.line.contains("group_order") &&
            Int(r.line["group_order"].get<std::string>()) > max_order) {
            ++skipped;
            continue;
        }
        std::cout << r.line.dump() << "\n";
        lines.push_back(r.line);
        violations += r.theorem_violation ? 1 : 0;
        counterexamples += r.conjecture_counterexample ? 1 : 0;
        errors += r.entry_error ? 1 : 0;
    }
    std::cout << "scan: " << lines.size() << " entries, " << violations
              << " theorem violations, " << counterexamples
              << " conjecture C counterexamples, " << errors << " errors";
    if (skipped) std::cout << ", " << skipped << " over --max";
    std::cout << "\n";
    emit(lines, json_path);
    return violations > 0 ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"character tables and rings of integers"};
    app.require_subcommand(1);

    std::string source, json_path, corpus_path;
    long an_n = 0, an_max = 31, hnf_ceiling = 512, threads = 1;
    bool paper_table = false;
    std::string max_order_str = "1000000000";
    std::vector<std::string> checks;

    auto* t = app.add_subcommand("table", "print a character table");
    t->add_option("source", source)->required();
    t->add_option("--json", json_path);

    auto* q = app.add_subcommand("quotient", "order report Z_K/Z[G]");
    q->add_option("source", source)->required();
    q->add_option("--json", json_path);

    auto* a = app.add_subcommand("an", "alternating group pipeline");
    a->add_option("n", an_n)->required();
    a->add_option("--max", an_max);
    a->add_flag("--paper-table", paper_table);
    a->add_option("--hnf-ceiling", hnf_ceiling);
    a->add_option("--json", json_path);

    auto* sc = app.add_subcommand("scan", "run theorem suites over a corpus");
    sc->add_option("--corpus", corpus_path);
    sc->add_option("--check", checks);
    sc->add_option("--threads", threads);
    sc->add_option("--max", max_order_str);
    sc->add_option("--json", json_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*t) return cmd_table(source, json_path);
        if (*q) return cmd_quotient(source, json_path);
        if (*a) return cmd_an(paper_table ? std::min(an_n, an_max) : an_n, paper_table,
                              hnf_ceiling, json_path);
        if (*sc) return cmd_scan(corpus_path, checks, threads, Int(max_order_str), json_path);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const EnumBoundExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
