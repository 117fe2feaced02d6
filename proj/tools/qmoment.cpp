// Command-line front end: computes the q-series objects of the one-prime
// moment deformation (moments, determinant normalizations, Jacobi data,
// wedge traces, eigenvalue series, closed forms) and runs the verification
// suites. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qmoment/qmoment.hpp"

namespace qm = qmoment;
using qm::json;

namespace {

struct RunConfig {
    int order = 12;
    int n = 1;
    int n_max = 4;
    int max_k = 8;
    int m = 1;
    int count = 4;
    unsigned long prime = 2;
    unsigned terms = 40;
    unsigned precision = 10;
    unsigned bound = 30;
    std::string format = "text";
    std::string parity = "both";
    bool provenance = false;
};

int default_order() {
    if (const char* env = std::getenv("QMOMENT_ORDER")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 12;
}

bool latex(const RunConfig& c) { return c.format == "latex"; }

void emit_series(const std::string& name, const qm::Series& s, const RunConfig& c) {
    if (c.format == "json") {
        json j{{"name", name}, {"series", qm::to_json(s)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << name << " = " << qm::render_series(s, latex(c)) << "\n";
    }
}

qm::Parity parse_parity(const std::string& s) {
    return s == "odd" ? qm::Parity::odd : qm::Parity::even;
}

int cmd_moments(const RunConfig& c) {
    qm::MomentTable t = qm::MomentTable::build(static_cast<unsigned>(c.max_k), c.order);
    std::vector<std::string> ratios =
        qm::numeric_ratios(c.prime, static_cast<unsigned>(c.max_k), c.terms, c.precision);
    if (c.format == "json") {
        json entries = json::array();
        for (unsigned k = 0; k <= t.max_k; ++k)
            entries.push_back(json{{"k", k}, {"series", qm::to_json(t.entries[k])}});
        json j{{"max_k", t.max_k},
               {"order", t.order},
               {"entries", entries},
               {"ratios", json{{"prime", c.prime},
                               {"lambert_terms", c.terms},
                               {"k_start", 1},
                               {"values", ratios}}}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (unsigned k = 0; k <= t.max_k; ++k)
        std::cout << "c(" << 2 * k << ",q) = " << qm::render_series(t.entries[k], latex(c)) << "\n";
    std::cout << "ratios c(2k,p)/c(0,p) at p=" << c.prime << ", Lambert weights l=0.." << c.terms
              << ", k = 1.." << c.max_k << ":\n";
    for (size_t i = 0; i < ratios.size(); ++i)
        std::cout << "  k=" << (i + 1) << ": " << ratios[i] << "\n";
    return 0;
}

int cmd_delta(const RunConfig& c) {
    qm::MomentTable t = qm::MomentTable::build(static_cast<unsigned>(c.n), c.order);
    if (c.parity == "both") {
        emit_series("Delta_" + std::to_string(c.n), qm::delta_series(c.n, t), c);
    } else {
        bool odd = c.parity == "odd";
        emit_series("Delta_" + std::to_string(c.n) + (odd ? "^-" : "^+"),
                    qm::parity_delta_series(c.n, odd, t), c);
    }
    return 0;
}

int cmd_jacobi(const RunConfig& c) {
    qm::MomentTable t = qm::MomentTable::build(static_cast<unsigned>(c.n) + 1, c.order);
    emit_series("a(" + std::to_string(c.n) + ")^2", qm::a_squared_series(c.n, t), c);
    return 0;
}

int cmd_dn(const RunConfig& c) {
    qm::MomentTable t = qm::MomentTable::build(static_cast<unsigned>(c.n) + 1, c.order);
    emit_series("-i d_" + std::to_string(c.n), qm::d_entry_series(c.n, t), c);
    return 0;
}

int cmd_polys(const RunConfig& c) {
    qm::MomentTable t = qm::MomentTable::build(static_cast<unsigned>(c.n) + 1, c.order);
    auto fam = qm::monic_orthogonal_polys(c.n, t);
    const auto& p = fam.back();
    if (c.format == "json") {
        json j{{"name", "P_" + std::to_string(c.n)}, {"poly", qm::to_json(p)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "P_" << c.n << "(x,q):\n" << qm::render_poly(p, latex(c)) << "\n";
    }
    return 0;
}

int cmd_eigen(const RunConfig& c) {
    qm::Parity par = parse_parity(c.parity);
    qm::EigenSeriesFamily fam = qm::extract_eigen_series(c.n, par, c.order);
    std::string tag = std::string("lambda") + (par == qm::Parity::even ? "+" : "-") + "_" +
                      std::to_string(c.n);
    if (c.format == "json") {
        json series = json::array();
        for (const auto& s : fam.series) series.push_back(qm::to_json(s));
        json j{{"n", fam.n},
               {"parity", par == qm::Parity::even ? "even" : "odd"},
               {"series", series}};
        if (c.provenance) {
            json prov = json::array();
            for (const auto& p : fam.provenance)
                prov.push_back(json{{"k", p.k}, {"j", p.j}, {"trace_m", p.trace_m}, {"exponent", p.exponent}});
            j["provenance"] = prov;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (size_t k = 0; k < fam.series.size(); ++k)
        std::cout << tag << "(" << k << ") = " << qm::render_series(fam.series[k], latex(c)) << "\n";
    if (c.provenance)
        for (const auto& p : fam.provenance)
            std::cout << "  lambda(" << p.k << "," << p.j << ") fixed by wedge trace m=" << p.trace_m
                      << " at q^" << p.exponent << "\n";
    return 0;
}

int cmd_wedge(const RunConfig& c) {
    qm::Parity par = parse_parity(c.parity);
    emit_series("Tr(wedge^" + std::to_string(c.m) + " A_" + std::to_string(c.n) +
                    (par == qm::Parity::even ? "^+" : "^-") + ")",
                qm::wedge_trace_series(c.n, par, c.m, c.order), c);
    return 0;
}

int cmd_ghost(const RunConfig& c) {
    qm::MomentTable t = qm::MomentTable::build(static_cast<unsigned>(c.n), c.order);
    std::vector<qm::Sqrt2> g = qm::delta_series(c.n, t).ghost_components(c.count);
    if (c.format == "json") {
        json vals = json::array();
        for (const auto& v : g) vals.push_back(qm::to_json(v));
        std::cout << json{{"n", c.n}, {"ghost", vals}}.dump(2) << "\n";
        return 0;
    }
    std::cout << "ghost(Delta_" << c.n << ") =";
    for (const auto& v : g) std::cout << " " << qm::render_coeff(v, latex(c)) << " |";
    std::cout << "\n";
    return 0;
}

int cmd_closedforms(const RunConfig& c) {
    qm::MomentTable t = qm::MomentTable::build(static_cast<unsigned>(c.n_max) + 1, c.order);
    bool all_ok = true;
    json rows = json::array();
    for (int n = 1; n <= c.n_max; ++n) {
        qm::ClosedFormReport rep = qm::closed_form_report(n, t);
        all_ok = all_ok && rep.all_matched;
        if (c.format == "json") {
            json vals, match;
            for (const auto& [k, v] : rep.values) vals[k] = qm::to_json(v);
            for (const auto& [k, v] : rep.matched) match[k] = v;
            rows.push_back(json{{"n", n}, {"values", vals}, {"matched", match}});
        } else {
            std::cout << "n=" << n << (rep.all_matched ? "  [ok]" : "  [MISMATCH]") << "\n";
            for (const auto& [k, v] : rep.values)
                std::cout << "  " << k << " = " << qm::render_coeff(v, latex(c))
                          << (rep.matched.at(k) ? "" : "   <-- does not match series") << "\n";
        }
    }
    if (c.format == "json") std::cout << rows.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

// ---- golden tables -------------------------------------------------------

std::vector<std::pair<std::string, std::string>> golden_tables() {
    std::vector<std::pair<std::string, std::string>> out;
    auto add = [&](const std::string& name, const std::string& body) { out.emplace_back(name, body); };

    {
        std::ostringstream os;
        for (int n = 0; n <= 10; ++n)
            os << "D_" << n << "(0) = " << qm::render_latexish(qm::d_n_zero_closed(n)) << "\n";
        add("d_n_zero.txt", os.str());
    }
    {
        qm::MomentTable t = qm::MomentTable::build(8, 6);
        std::ostringstream os;
        for (int n = 1; n <= 8; ++n)
            os << "Delta_" << n << " = " << qm::render_series(qm::delta_series(n, t), true) << "\n";
        add("delta_series.txt", os.str());
    }
    {
        qm::MomentTable t = qm::MomentTable::build(6, 8);
        std::ostringstream os;
        for (int n = 1; n <= 6; ++n) {
            auto g = qm::delta_series(n, t).ghost_components(4);
            os << "Delta_" << n << ":";
            for (const auto& v : g) os << "  " << qm::render_latexish(v);
            os << "\n";
        }
        add("ghost_matrix.txt", os.str());
    }
    {
        std::ostringstream os;
        for (auto par : {qm::Parity::even, qm::Parity::odd}) {
            os << (par == qm::Parity::even ? "c+" : "c-") << ":\n";
            for (int r = 0; r < 4; ++r) {
                int n = par == qm::Parity::even ? 2 * r : 2 * r + 1;
                for (int m = 1; m <= 4; ++m)
                    os << "  " << (m <= r + 1 ? qm::render_latexish(qm::leading_coeff(n, par, m))
                                              : std::string("0"));
                os << "\n";
            }
        }
        add("leading_coeffs.txt", os.str());
    }
    {
        std::ostringstream os;
        for (auto par : {qm::Parity::even, qm::Parity::odd})
            for (int n = 0; n <= 2; ++n) {
                qm::EigenSeriesFamily fam = qm::extract_eigen_series(n, par, 6);
                for (size_t k = 0; k < fam.series.size(); ++k)
                    os << "lambda" << (par == qm::Parity::even ? "+" : "-") << "_" << n << "(" << k
                       << ") = " << qm::render_series(fam.series[k], true) << "\n";
            }
        add("eigen_series.txt", os.str());
    }
    {
        qm::MomentTable t = qm::MomentTable::build(5, 6);
        std::ostringstream os;
        for (int n = 1; n <= 3; ++n)
            os << "-i d_" << n << " = " << qm::render_series(qm::d_entry_series(n, t), true) << "\n";
        add("d_entries.txt", os.str());
    }
    {
        qm::MomentTable t = qm::MomentTable::build(4, 6);
        auto fam = qm::monic_orthogonal_polys(3, t);
        std::ostringstream os;
        os << "P_2:\n" << qm::render_poly(fam[2], true) << "\nP_3:\n" << qm::render_poly(fam[3], true) << "\n";
        add("polys.txt", os.str());
    }
    {
        std::ostringstream os;
        for (unsigned n = 1; n <= 16; ++n)
            os << "delta1(" << n << ") = " << qm::render_latexish(qm::delta1(n)) << "\n";
        add("delta1_list.txt", os.str());
    }
    {
        std::ostringstream os;
        for (unsigned n = 1; n <= 7; ++n)
            os << "Y(" << n << ") = " << qm::render_latexish(qm::hypergeometric_Y(n)) << "\n";
        add("y_list.txt", os.str());
    }
    {
        std::ostringstream os;
        auto ratios = qm::numeric_ratios(2, 8, 40, 6);
        for (size_t i = 0; i < ratios.size(); ++i) os << "k=" << (i + 1) << ": " << ratios[i] << "\n";
        add("ratios_p2.txt", os.str());
    }
    return out;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const RunConfig& c, const std::string& golden_dir, bool golden, bool write_golden) {
    if (write_golden) {
        std::filesystem::create_directories(golden_dir);
        for (const auto& [name, body] : golden_tables()) {
            std::ofstream f(golden_dir + "/" + name, std::ios::binary);
            f << body;
        }
        std::cout << "golden tables written to " << golden_dir << "\n";
        return 0;
    }
    if (golden) {
        for (const auto& [name, body] : golden_tables()) {
            std::ifstream f(golden_dir + "/" + name, std::ios::binary);
            if (!f) {
                std::cerr << "FAIL golden: missing " << golden_dir + "/" + name << "\n";
                return 1;
            }
            std::stringstream buf;
            buf << f.rdbuf();
            if (buf.str() != body) {
                std::cerr << "FAIL golden: " << name << " differs\n";
                return 1;
            }
        }
        std::cout << "golden tables match\n";
        return 0;
    }

    bool ok = true;
    auto report = [&ok](const std::string& name, bool pass, const std::string& detail = "") {
        std::cout << (pass ? "PASS " : "FAIL ") << name;
        if (!pass && !detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
        ok = ok && pass;
    };

    qm::IntegralityReport ir = qm::catalan_integrality_suite(c.bound);
    report("catalan-integrality(bound=" + std::to_string(c.bound) + ")", ir.ok, ir.counterexample);

    qm::MomentTable t = qm::MomentTable::build(static_cast<unsigned>(c.n_max) + 1, c.order);
    for (int n = 0; n <= c.n_max; ++n) {
        qm::Series del = qm::delta_series(n, t);
        bool pipelines = qm::det_via_rankone(n, c.order) == del &&
                         qm::delta_via_eigen(n, c.order) == del;
        report("determinant-pipelines(n=" + std::to_string(n) + ")", pipelines);
        report("membership(n=" + std::to_string(n) + ")", del.membership_scan());
    }
    for (int n = 0; n <= c.n_max; ++n)
        for (auto par : {qm::Parity::even, qm::Parity::odd}) {
            int dim = static_cast<int>(qm::parity_block_indices(n, par).size());
            bool valuation_ok = true;
            for (int m = 1; m <= std::min(dim, 3); ++m) {
                qm::Series w = qm::wedge_trace_series(n, par, m, c.order);
                for (int j = 0; j < std::min(m * m, c.order + 1); ++j)
                    valuation_ok = valuation_ok && w[j].is_zero();
            }
            report("wedge-valuation(n=" + std::to_string(n) +
                       (par == qm::Parity::even ? ",even)" : ",odd)"),
                   valuation_ok);
        }
    bool closed_ok = true;
    for (int n = 1; n <= c.n_max; ++n)
        closed_ok = closed_ok && qm::closed_form_report(n, t).all_matched;
    report("closed-forms(n<=" + std::to_string(c.n_max) + ")", closed_ok);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series engine for the one-prime moment deformation"};
    app.require_subcommand(1);

    RunConfig c;
    c.order = default_order();
    std::string golden_dir = "tests/golden";
    bool golden = false, write_golden = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--order", c.order, "series truncation order");
        sub->add_option("--format", c.format, "output format")
            ->check(CLI::IsMember({"text", "json", "latex"}));
    };

    auto prime_check = CLI::Validator(
        [](std::string& s) -> std::string {
            unsigned long v = std::strtoul(s.c_str(), nullptr, 10);
            if (v < 2) return "must be a prime";
            for (unsigned long d = 2; d * d <= v; ++d)
                if (v % d == 0) return s + " is not prime";
            return {};
        },
        "PRIME");

    CLI::App* moments = app.add_subcommand("moments", "deformed moment series and p-ratios");
    add_common(moments);
    moments->add_option("--max-k", c.max_k, "largest moment degree 2k");
    moments->add_option("--prime", c.prime, "prime p, evaluation point q=1/p")->check(prime_check);
    moments->add_option("--terms", c.terms, "Lambert weights f(2l+1) for l=0..terms");
    moments->add_option("--precision", c.precision, "decimal digits for the ratio list");

    CLI::App* delta = app.add_subcommand("delta", "determinant unit series Delta_n(q)");
    add_common(delta);
    delta->add_option("--n", c.n, "matrix index")->required();
    delta->add_option("--parity", c.parity, "both, even or odd block")
        ->check(CLI::IsMember({"both", "even", "odd"}));

    CLI::App* jacobi = app.add_subcommand("jacobi", "off-diagonal squares a(n)^2(q)");
    add_common(jacobi);
    jacobi->add_option("--n", c.n, "index")->required();

    CLI::App* dn = app.add_subcommand("dn", "diagonal entries -i d_n(q)");
    add_common(dn);
    dn->add_option("--n", c.n, "index")->required();

    CLI::App* polys = app.add_subcommand("polys", "monic orthogonal polynomial P_n(x,q)");
    add_common(polys);
    polys->add_option("--n", c.n, "degree")->required();

    CLI::App* eigen = app.add_subcommand("eigen", "eigenvalue q-series of one parity block");
    add_common(eigen);
    eigen->add_option("--n", c.n, "family index (block dimension n+1)")->required();
    eigen->add_option("--parity", c.parity, "even or odd block")
        ->required()
        ->check(CLI::IsMember({"even", "odd"}));
    eigen->add_flag("--provenance", c.provenance, "print which trace equation fixed each coefficient");

    CLI::App* wedge = app.add_subcommand("wedge", "wedge-power trace series");
    add_common(wedge);
    wedge->add_option("--n", c.n, "matrix index")->required();
    wedge->add_option("--parity", c.parity, "even or odd block")
        ->required()
        ->check(CLI::IsMember({"even", "odd"}));
    wedge->add_option("--m", c.m, "wedge power")->required()->check(CLI::PositiveNumber);

    CLI::App* ghost = app.add_subcommand("ghost", "ghost components of Delta_n");
    add_common(ghost);
    ghost->add_option("--n", c.n, "index")->required();
    ghost->add_option("--count", c.count, "number of components");

    CLI::App* closedforms = app.add_subcommand("closedforms", "closed-form report rows");
    add_common(closedforms);
    closedforms->add_option("--n-max", c.n_max, "largest index");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    add_common(verify);
    verify->add_option("--n-max", c.n_max, "largest index");
    verify->add_option("--bound", c.bound, "integrality suite bound");
    verify->add_flag("--golden", golden, "diff regenerated tables against the golden directory");
    verify->add_flag("--write-golden", write_golden, "regenerate the golden directory");
    verify->add_option("--golden-dir", golden_dir, "golden table directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // usage errors exit 2, --help exits 0
    }

    try {
        if (moments->parsed()) return cmd_moments(c);
        if (delta->parsed()) return cmd_delta(c);
        if (jacobi->parsed()) return cmd_jacobi(c);
        if (dn->parsed()) return cmd_dn(c);
        if (polys->parsed()) return cmd_polys(c);
        if (eigen->parsed()) return cmd_eigen(c);
        if (wedge->parsed()) return cmd_wedge(c);
        if (ghost->parsed()) return cmd_ghost(c);
        if (closedforms->parsed()) return cmd_closedforms(c);
        if (verify->parsed()) return cmd_verify(c, golden_dir, golden, write_golden);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
