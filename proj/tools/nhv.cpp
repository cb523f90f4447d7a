// nhv: command-line front end for the ennil library.
//
// Subcommands: relations, alpha, apply, mul, epsilon, nilpotency, k0, verma,
// pcomplex, filtration, conjecture, suite. Every subcommand emits a report
// (text or JSON) with a canonical, name-sorted list of checks. Exit status:
// 0 on pass/info, 1 on fail, 2 on usage or input errors.
#include "CLI11.hpp"
#include "json.hpp"

#include "ennil/expr.hpp"
#include "ennil/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ennil;
using nlohmann::json;

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

struct Output {
    std::string format = "text";
    std::string out_path;
};

json report_json(const Report &rep, const json &params) {
    json checks = json::array();
    for (auto &c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"equal", c.equal},
                          {"detail", c.detail}});
    return json{{"command", rep.command}, {"params", params},
                {"status", rep.status()}, {"checks", checks},
                {"timing_ms", rep.timing_ms}};
}

std::string report_text(const Report &rep, const json &params) {
    std::ostringstream os;
    os << rep.command;
    if (!params.empty()) os << " " << params.dump();
    os << ": " << rep.status() << " (" << rep.checks.size() << " checks, "
       << rep.timing_ms << " ms)\n";
    for (auto &c : rep.checks) {
        os << "  [" << (c.equal ? "ok" : "FAIL") << "] " << c.name;
        if (!c.lhs.empty()) os << ": " << c.lhs;
        if (!c.rhs.empty()) os << " == " << c.rhs;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    return os.str();
}

int emit(Report rep, const json &params, const Output &o) {
    std::stable_sort(rep.checks.begin(), rep.checks.end(),
                     [](const Check &a, const Check &b) { return a.name < b.name; });
    std::string body = o.format == "json" ? report_json(rep, params).dump(2) + "\n"
                                          : report_text(rep, params);
    if (o.out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(o.out_path);
        if (!f) {
            std::cerr << "nhv: cannot open output file " << o.out_path << "\n";
            return 2;
        }
        f << body;
    }
    return rep.info_only || rep.passed() ? 0 : 1;
}

template <class F> Report timed(F &&f) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep = f();
    rep.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    return rep;
}

long require_prime(long p) {
    if (!is_prime(p))
        throw CLI::ValidationError("--p", "p must be prime, got " + std::to_string(p));
    return p;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"nhv: enhanced nilHecke verification tool"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--out", out.out_path, "Write the report to FILE");
    for (auto *opt : {app.get_option("--format"), app.get_option("--out")})
        (void)opt;
    app.fallthrough();

    auto bounds = suite_bounds_from_env();
    int n = 1;
    long p = 3, D = -1, m = 0, mmax = 4;
    std::string expr_src, lhs_src, rhs_src, op = "dn", input_path,
                k0_check = "all";

    auto *c_rel = app.add_subcommand("relations", "Verify the defining relations of A_n");
    c_rel->add_option("--n", n, "Rank")->required()->check(CLI::Range(1, 8));
    c_rel->add_option("--p", p, "Prime (note: the identities hold over Z and reduce mod p)");
    c_rel->add_option("--degree", D, "Oracle degree bound");

    auto *c_alpha = app.add_subcommand("alpha", "Tabulate the alpha polynomials and d_n on the omegas");
    c_alpha->add_option("--n", n, "Rank")->required()->check(CLI::Range(1, 8));

    auto *c_apply = app.add_subcommand("apply", "Apply an operator to a ring expression");
    c_apply->add_option("--op", op, "Operator: dn | partial:r | witt:k | e | f | h")->required();
    c_apply->add_option("--n", n, "Rank")->required()->check(CLI::Range(1, 12));
    c_apply->add_option("--expr", expr_src, "Ring expression")->required();

    auto *c_mul = app.add_subcommand("mul", "Multiply two algebra expressions in A_n");
    c_mul->add_option("--n", n, "Rank")->required()->check(CLI::Range(1, 8));
    c_mul->add_option("--lhs", lhs_src, "Left factor")->required();
    c_mul->add_option("--rhs", rhs_src, "Right factor")->required();

    auto *c_eps = app.add_subcommand("epsilon", "Normal form of the idempotent epsilon_n");
    c_eps->add_option("--n", n, "Rank")->required()->check(CLI::Range(1, 6));

    auto *c_nil = app.add_subcommand("nilpotency", "Check d^p = 0 over F_p");
    c_nil->add_option("--p", p, "Prime")->required();
    c_nil->add_option("--n", n, "Rank (requires n < p)")->required();

    auto *c_k0 = app.add_subcommand("k0", "Grothendieck-group model checks");
    c_k0->add_option("--p", p, "Prime")->required();
    c_k0->add_option("--check", k0_check, "Which check")
        ->check(CLI::IsMember({"relations", "iso", "eclass", "all"}))
        ->capture_default_str();

    auto *c_verma = app.add_subcommand("verma", "Baby Verma model relation checks");
    c_verma->add_option("--p", p, "Prime")->required();

    auto *c_pc = app.add_subcommand("pcomplex", "p-complex tools");
    auto *c_blocks = c_pc->add_subcommand("blocks", "Jordan blocks and K0 symbol of a p-complex");
    c_blocks->add_option("--p", p, "Prime")->required();
    c_blocks->add_option("--input", input_path, "JSON description of the complex")
        ->required()->check(CLI::ExistingFile);

    auto *c_filt = app.add_subcommand("filtration", "Filtration / character checks");
    c_filt->add_option("--n", n, "Rank")->required()->check(CLI::Range(1, 6));
    c_filt->add_option("--m", m, "Filtration step")->required();
    c_filt->add_option("--degree", D, "Slice degree bound");

    auto *c_conj = app.add_subcommand("conjecture", "Scan sl2 decompositions of R_{n,m}");
    c_conj->add_option("--n", n, "Rank")->required()->check(CLI::Range(2, 4));
    c_conj->add_option("--mmax", mmax, "Largest m to scan")->required();
    c_conj->add_option("--degree", D, "Unused; kept for interface stability");

    auto *c_suite = app.add_subcommand("suite", "Run the full acceptance battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    if (D >= 0) { bounds.relations = D; bounds.slices = D; }

    try {
        if (*c_rel) {
            json params{{"n", n}, {"degree", bounds.relations}};
            bool with_p = c_rel->count("--p") > 0;
            if (with_p) { require_prime(p); params["p"] = p; }
            Report rep = timed([&] {
                Report r = verify_relations<Int>(n, bounds.relations);
                if (with_p)
                    r.add("mod_p_note", true, "", "",
                          "relations verified over Z; they reduce mod " +
                              std::to_string(p));
                return r;
            });
            return emit(std::move(rep), params, out);
        }
        if (*c_alpha) {
            json params{{"n", n}};
            Report rep = timed([&] {
                return n == 5 ? crit_alpha_example() : alpha_report(n);
            });
            return emit(std::move(rep), params, out);
        }
        if (*c_apply) {
            json params{{"n", n}, {"op", op}, {"expr", expr_src}};
            ExtPoly<Int> f = parse_ring(expr_src, n);
            Derivation<Int> d(n);
            if (op == "dn") d = dn_derivation<Int>(n);
            else if (op == "e") d = sl2_e<Int>(n);
            else if (op == "f") d = sl2_f<Int>(n);
            else if (op == "h") d = sl2_h<Int>(n);
            else if (op.rfind("partial:", 0) == 0) {
                int r = std::stoi(op.substr(8));
                if (r < 1 || r > n) throw IndexOutOfRange("partial index " + std::to_string(r));
                d = partial_derivation<Int>(n, r);
            } else if (op.rfind("witt:", 0) == 0) {
                int k = std::stoi(op.substr(5));
                if (k < -1) throw CLI::ValidationError("--op", "witt index must be >= -1");
                d = witt_derivation<Int>(n, k);
            } else {
                throw CLI::ValidationError("--op", "unknown operator " + op);
            }
            Report rep = timed([&] {
                Report r;
                r.command = "apply";
                r.info_only = true;
                r.add("result", true, poly_str(d.apply(f)), "", op + " applied");
                return r;
            });
            return emit(std::move(rep), params, out);
        }
        if (*c_mul) {
            json params{{"n", n}, {"lhs", lhs_src}, {"rhs", rhs_src}};
            AnElt<Int> a = parse_algebra(lhs_src, n), b = parse_algebra(rhs_src, n);
            Report rep = timed([&] {
                Report r;
                r.command = "mul";
                r.info_only = true;
                r.add("product", true, an_str(an_mul(a, b)), "", "normal form");
                return r;
            });
            return emit(std::move(rep), params, out);
        }
        if (*c_eps) {
            json params{{"n", n}};
            Report rep = timed([&] {
                Report r;
                r.command = "epsilon";
                AnElt<Int> e = epsilon<Int>(n);
                r.add("idempotent", an_mul(e, e) == e, "epsilon^2", "epsilon");
                r.add("normal_form", true, an_str(e), "", "");
                return r;
            });
            return emit(std::move(rep), params, out);
        }
        if (*c_nil) {
            require_prime(p);
            if (n >= p)
                throw CLI::ValidationError("--n", "need n < p for F_p arithmetic");
            json params{{"n", n}, {"p", p}};
            Report rep = timed([&] {
                Report r;
                r.command = "nilpotency";
                r.merge(nilpotency_check(p, n), "ring");
                r.merge(an_nilpotency_check(p, n), "algebra");
                return r;
            });
            return emit(std::move(rep), params, out);
        }
        if (*c_k0) {
            require_prime(p);
            json params{{"p", p}, {"check", k0_check}};
            Report rep = timed([&] {
                Report r;
                r.command = "k0";
                if (k0_check == "relations" || k0_check == "all")
                    r.merge(verify_uqsl2(p, "K0"), "relations");
                if (k0_check == "iso" || k0_check == "all")
                    r.merge(verify_iso(p), "iso");
                if (k0_check == "eclass" || k0_check == "all")
                    for (long nn = 1; nn < p; ++nn)
                        r.merge(categorified_E_class(nn, p).second,
                                "eclass n=" + std::to_string(nn));
                return r;
            });
            return emit(std::move(rep), params, out);
        }
        if (*c_verma) {
            require_prime(p);
            json params{{"p", p}};
            Report rep = timed([&] { return verify_uqsl2(p, "Verma"); });
            return emit(std::move(rep), params, out);
        }
        if (*c_blocks) {
            require_prime(p);
            json params{{"p", p}, {"input", input_path}};
            std::ifstream f(input_path);
            json desc = json::parse(f);
            if (desc.value("p", p) != p)
                throw CLI::ValidationError("--p", "prime disagrees with the input file");
            std::string field = desc.value("field", "Fp");
            Report rep = timed([&] {
                if (field == "Q")
                    return pcomplex_report(pcomplex_from_json<Rat>(desc));
                return pcomplex_report(pcomplex_from_json<Fp>(desc));
            });
            return emit(std::move(rep), params, out);
        }
        if (*c_filt) {
            json params{{"n", n}, {"m", m}, {"degree", bounds.slices}};
            Report rep = timed([&] {
                Report r;
                r.command = "filtration";
                if (n >= 2)
                    r.merge(filtration_check<Int>(n, static_cast<int>(m),
                                                  bounds.slices), "ring");
                r.merge(an_filtration_check<Int>(n, static_cast<int>(m),
                                                 bounds.slices), "algebra");
                return r;
            });
            return emit(std::move(rep), params, out);
        }
        if (*c_conj) {
            json params{{"n", n}, {"mmax", mmax}};
            Report rep = timed([&] {
                return conjecture_scan(n, static_cast<int>(mmax));
            });
            return emit(std::move(rep), params, out);
        }
        if (*c_suite) {
            auto criteria = run_acceptance(bounds);
            json params{{"degree_relations", bounds.relations},
                        {"degree_slices", bounds.slices}};
            Report all;
            all.command = "suite";
            int failures = 0;
            for (auto &c : criteria) {
                if (!c.rep.passed()) ++failures;
                all.timing_ms += c.rep.timing_ms;
                all.merge(c.rep, "criterion" + std::to_string(c.id));
                if (out.format == "text" && out.out_path.empty())
                    std::printf("criterion %2d (%s): %s  [%ld checks, %ld ms]\n",
                                c.id, c.name.c_str(),
                                c.rep.passed() ? "PASS" : "FAIL",
                                static_cast<long>(c.rep.checks.size()),
                                c.rep.timing_ms);
            }
            if (out.format == "text" && out.out_path.empty()) {
                std::printf("%zu/%zu criteria passed\n",
                            criteria.size() - failures, criteria.size());
                return failures == 0 ? 0 : 1;
            }
            return emit(std::move(all), params, out);
        }
    } catch (const CLI::ValidationError &e) {
        std::cerr << "nhv: " << e.what() << "\n";
        return 2;
    } catch (const SyntaxError &e) {
        std::cerr << "nhv: syntax error at position " << e.pos << ": "
                  << e.what() << "\n";
        return 2;
    } catch (const IndexOutOfRange &e) {
        std::cerr << "nhv: index out of range: " << e.what() << "\n";
        return 2;
    } catch (const ContextError &e) {
        std::cerr << "nhv: context error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception &e) {
        std::cerr << "nhv: bad JSON input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "nhv: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
