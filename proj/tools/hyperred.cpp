#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <thread>

#include "hyperred/congruence.hpp"
#include "hyperred/json_io.hpp"

using namespace hyperred;
using nlohmann::json;

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Poly load_poly_file(const std::string& path) {
    return poly_from_json(load_json_file(path));
}

int parse_sign(const std::string& flag) {
    if (flag == "alt") return -1;
    if (flag == "same") return 1;
    throw ParseError("--sign must be 'alt' or 'same'");
}

unsigned sweep_threads() {
    if (const char* env = std::getenv("HYPERRED_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1)
            throw ParseError("HYPERRED_THREADS must be a positive integer");
        return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

int cmd_analyze(const std::string& a_path, const std::string& b_path) {
    const SpaceInfo info = analyze(load_poly_file(a_path), load_poly_file(b_path));
    std::cout << space_info_to_json(info).dump(2) << "\n";
    return 0;
}

int cmd_reduce(const std::string& a_path, const std::string& b_path, const std::string& f_path,
               bool use_oracle) {
    const SpaceInfo info = analyze(load_poly_file(a_path), load_poly_file(b_path));
    const Poly f = load_poly_file(f_path);
    ReductionCertificate cert;
    if (use_oracle) {
        auto solved = oracle_reduce(info, f, reduced_support(info));
        if (!solved) {
            std::cerr << "error: no certificate within the default degree bound\n";
            return 2;
        }
        cert = std::move(*solved);
    } else {
        cert = reduce(info, f);
    }
    std::cout << certificate_to_json(cert).dump(2) << "\n";
    return 0;
}

int cmd_certify(const std::string& a_path, const std::string& b_path, const std::string& f_path,
                const std::string& cert_path) {
    const SpaceInfo info = analyze(load_poly_file(a_path), load_poly_file(b_path));
    const Poly f = load_poly_file(f_path);
    const ReductionCertificate cert = certificate_from_json(load_json_file(cert_path));
    const VerificationReport report = verify_certificate(info, f, cert);
    json j{{"pass", report.pass}, {"residual", poly_to_json(report.residual)}};
    std::cout << j.dump(2) << "\n";
    return report.pass ? 0 : 2;
}

int cmd_reduce_symmetric(const std::string& sign_flag, const std::string& alpha_str, int r, int m,
                         const std::string& special) {
    const int sign = parse_sign(sign_flag);
    const Rat alpha = parse_rational(alpha_str);
    TermSpec spec;
    IntegralReduction red;
    if (special == "half4") {
        if (sign != 1 || alpha != make_rational(1, 2) || r != 4)
            throw ParseError("--special half4 requires --sign same --alpha 1/2 --r 4");
        spec = half_quartic_spec();
        red = reduce_half_quartic(m);
    } else if (special.empty()) {
        spec = TermSpec::make(sign, alpha, r);
        red = sign == -1 ? reduce_alternating(spec, m) : reduce_same_sign(spec, m);
    } else {
        throw ParseError("unknown --special value: " + special);
    }
    std::cout << reduction_to_json(spec, red).dump(2) << "\n";
    return 0;
}

int cmd_eval(const std::string& sign_flag, const std::string& alpha_str, int r, int k) {
    const TermSpec spec = TermSpec::make(parse_sign(sign_flag), parse_rational(alpha_str), r);
    std::cout << format_rational(term_eval(spec, k)) << "\n";
    return 0;
}

int cmd_sum(const std::string& sign_flag, const std::string& alpha_str, int r,
            const std::string& f_path, int k_max) {
    const TermSpec spec = TermSpec::make(parse_sign(sign_flag), parse_rational(alpha_str), r);
    std::cout << format_rational(partial_sum(spec, load_poly_file(f_path), k_max)) << "\n";
    return 0;
}

std::vector<CongruenceReport> run_sweep(int which_case, int m_max, long p_max) {
    struct Task {
        int m;
        long p;
    };
    std::vector<Task> tasks;
    // Both base congruences need p >= 5; for the quartic family p must
    // also exceed (m-1)/2.
    const auto primes = primes_in_range(5, p_max);
    for (int m = 1; m <= m_max; m += 2)
        for (long p : primes) {
            if (which_case == 4 && p <= (m - 1) / 2) continue;
            tasks.push_back({m, p});
        }

    std::vector<CongruenceReport> results(tasks.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        size_t i;
        while ((i = next.fetch_add(1)) < tasks.size() && !failed.load()) {
            try {
                results[i] = which_case == 3 ? check_cubic(tasks[i].m, tasks[i].p)
                                             : check_quartic(tasks[i].m, tasks[i].p);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
            }
        }
    };
    const size_t want = std::min<size_t>(sweep_threads(), std::max<size_t>(tasks.size(), 1));
    if (want <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < want; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

int cmd_congruence(int which_case, int m_max, long p_max, bool as_json) {
    const auto results = run_sweep(which_case, m_max, p_max);
    bool all_pass = true;
    for (const auto& r : results) all_pass = all_pass && r.pass;
    if (as_json) {
        json arr = json::array();
        for (const auto& r : results) arr.push_back(report_to_json(r));
        std::cout << arr.dump(2) << "\n";
    } else {
        std::cout << std::left << std::setw(6) << "case" << std::setw(5) << "m" << std::setw(5)
                  << "p" << std::setw(12) << "lhs" << std::setw(12) << "rhs" << std::setw(16)
                  << "a_m" << std::setw(12) << "c_m"
                  << "pass\n";
        for (const auto& r : results)
            std::cout << std::left << std::setw(6)
                      << (r.theorem == CongruenceCase::Cubic ? "3" : "4") << std::setw(5) << r.m
                      << std::setw(5) << r.p << std::setw(12) << r.lhs_residue.get_str()
                      << std::setw(12) << r.rhs_residue.get_str() << std::setw(16)
                      << r.a_m.get_str() << std::setw(12) << (r.c_m ? r.c_m->get_str() : "-")
                      << (r.pass ? "yes" : "NO") << "\n";
        std::cout << (all_pass ? "all congruences hold\n" : "CONGRUENCE FAILURE\n");
    }
    return all_pass ? 0 : 2;
}

int cmd_scan_integrality(int m_max, bool as_json) {
    const auto entries = scan_integrality(m_max);
    if (as_json) {
        std::cout << integrality_to_json(entries).dump(2) << "\n";
    } else {
        std::cout << std::left << std::setw(5) << "m" << std::setw(9) << "integer"
                  << "a_m/((m-1)/2)!\n";
        for (const auto& e : entries)
            std::cout << std::left << std::setw(5) << e.m << std::setw(9)
                      << (e.integral ? "yes" : "NO") << format_rational(e.ratio) << "\n";
    }
    for (const auto& e : entries)
        if (!e.integral)
            std::cerr << "FINDING: a_" << e.m << "/((m-1)/2)! = " << format_rational(e.ratio)
                      << " is not an integer; this is a counterexample to the conjectured "
                         "integrality\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperred: exact polynomial reduction of hypergeometric terms, telescoping "
                 "certificates, and super-congruence checks"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string a_path, b_path, f_path, cert_path;
    std::string sign_flag, alpha_str, special;
    int r = 0, m = 0, k = 0, k_max = 0, m_max = 0;
    int which_case = 3;
    long p_max = 0;
    bool use_oracle = false, as_json = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "analyze a term-ratio pair (a, b)");
    analyze_cmd->add_option("--a", a_path, "numerator polynomial file")->required();
    analyze_cmd->add_option("--b", b_path, "denominator polynomial file")->required();
    analyze_cmd->callback([&] { exit_code = cmd_analyze(a_path, b_path); });

    auto* reduce_cmd = app.add_subcommand("reduce", "reduce f against the difference space");
    reduce_cmd->add_option("--a", a_path, "numerator polynomial file")->required();
    reduce_cmd->add_option("--b", b_path, "denominator polynomial file")->required();
    reduce_cmd->add_option("--f", f_path, "polynomial to reduce")->required();
    reduce_cmd->add_flag("--oracle", use_oracle, "solve the exact linear system instead");
    reduce_cmd->callback([&] { exit_code = cmd_reduce(a_path, b_path, f_path, use_oracle); });

    auto* certify_cmd = app.add_subcommand("certify", "verify a reduction certificate");
    certify_cmd->add_option("--a", a_path, "numerator polynomial file")->required();
    certify_cmd->add_option("--b", b_path, "denominator polynomial file")->required();
    certify_cmd->add_option("--f", f_path, "reduced polynomial file")->required();
    certify_cmd->add_option("--cert", cert_path, "certificate JSON file")->required();
    certify_cmd->callback([&] { exit_code = cmd_certify(a_path, b_path, f_path, cert_path); });

    auto* rs_cmd = app.add_subcommand(
        "reduce-symmetric", "integer reduction of (2Dk+D*alpha)^m for a structured term");
    rs_cmd->add_option("--sign", sign_flag, "alt or same")->required();
    rs_cmd->add_option("--alpha", alpha_str, "rational parameter, e.g. 1/2")->required();
    rs_cmd->add_option("--r", r, "term power")->required();
    rs_cmd->add_option("--m", m, "exponent to reduce")->required();
    rs_cmd->add_option("--special", special, "half4: refined quartic half-integer reduction");
    rs_cmd->callback(
        [&] { exit_code = cmd_reduce_symmetric(sign_flag, alpha_str, r, m, special); });

    auto* eval_cmd = app.add_subcommand("eval", "exact term value t_k");
    eval_cmd->add_option("--sign", sign_flag, "alt or same")->required();
    eval_cmd->add_option("--alpha", alpha_str, "rational parameter")->required();
    eval_cmd->add_option("--r", r, "term power")->required();
    eval_cmd->add_option("--k", k, "index")->required()->check(CLI::NonNegativeNumber);
    eval_cmd->callback([&] { exit_code = cmd_eval(sign_flag, alpha_str, r, k); });

    auto* sum_cmd = app.add_subcommand("sum", "exact partial sum of f(k) t_k");
    sum_cmd->add_option("--sign", sign_flag, "alt or same")->required();
    sum_cmd->add_option("--alpha", alpha_str, "rational parameter")->required();
    sum_cmd->add_option("--r", r, "term power")->required();
    sum_cmd->add_option("--f", f_path, "weight polynomial file")->required();
    sum_cmd->add_option("--K", k_max, "upper summation index")->required()->check(CLI::NonNegativeNumber);
    sum_cmd->callback([&] { exit_code = cmd_sum(sign_flag, alpha_str, r, f_path, k_max); });

    auto* cong_cmd = app.add_subcommand("congruence", "sweep a super-congruence family mod p^4");
    cong_cmd->add_option("--case", which_case, "3 (alternating cubic) or 4 (quartic)")
        ->required()
        ->check(CLI::IsMember({3, 4}));
    cong_cmd->add_option("--m-max", m_max, "largest odd exponent")->required();
    cong_cmd->add_option("--p-max", p_max, "largest prime")->required();
    cong_cmd->add_flag("--json", as_json, "emit JSON reports");
    cong_cmd->callback([&] { exit_code = cmd_congruence(which_case, m_max, p_max, as_json); });

    auto* scan_cmd = app.add_subcommand("scan-integrality",
                                        "report integrality of the scaled quartic coefficients");
    scan_cmd->add_option("--m-max", m_max, "largest odd exponent")->required();
    scan_cmd->add_flag("--json", as_json, "emit JSON reports");
    scan_cmd->callback([&] { exit_code = cmd_scan_integrality(m_max, as_json); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 4;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ZeroInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 3;
    } catch (const SymmetryError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 3;
    } catch (const ShiftError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 3;
    } catch (const NotPIntegralError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
