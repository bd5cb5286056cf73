#include "cli.hpp"

#include <array>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "matdiv/errors.hpp"
#include "matdiv/gcd_lcm.hpp"
#include "matdiv/hermite.hpp"
#include "matdiv/matrix_io.hpp"
#include "matdiv/verify.hpp"

namespace matdiv::cli {
namespace {

using nlohmann::json;

enum class Ring { Int, PolyQ };

struct CliConfig {
    Ring ring = Ring::Int;
    bool json = false;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> trials;
    bool witness = false;
};

struct Arguments {
    CliConfig config;
    std::string command;
    std::array<std::string, 2> files;  // positional matrix files
    std::string params_file;  // --with-params
    bool particular = false;
    bool gcd = false;
    bool lcm = false;
    bool right = false;
};

enum Exit : int { kOk = 0, kFalse = 1, kUsage = 2 };

// Collects named matrices and scalars, then prints them either as
// "# name" headed matrix blocks or as one JSON object.
template <EuclideanDomain T>
class Output {
public:
    explicit Output(bool as_json) : as_json_(as_json) {}

    void note(const std::string& key, const json& value, const std::string& text) {
        doc_[key] = value;
        if (!text.empty()) text_ += "# " + text + "\n";
    }

    void matrix(const std::string& name, const Matrix<T>& m) {
        doc_[name] = matrix_to_json(m);
        text_ += "# " + name + "\n" + format_matrix(m);
    }

    void line(const std::string& s) { text_ += s + "\n"; }

    void flush(std::ostream& out) const {
        if (as_json_) out << doc_.dump(2) << "\n";
        else out << text_;
    }

private:
    bool as_json_;
    json doc_ = json::object();
    std::string text_;
};

template <EuclideanDomain T>
std::string scalar(const T& x) {
    return RingTraits<T>::format(x);
}

template <EuclideanDomain T>
json scalars(const std::vector<T>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(scalar(x));
    return a;
}

template <EuclideanDomain T>
std::string join(const std::vector<T>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : " ") + scalar(x);
    return s;
}

template <EuclideanDomain T>
void describe_failure(Output<T>& o, const SolvabilityCertificate<T>& cert) {
    const auto [i, j] = *cert.failing_cell;
    const T le = cert.L(i, j) * cert.eps()[j];
    const std::string at = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    std::string reason;
    if (i < cert.t) {
        reason = "phi_" + std::to_string(i + 1) + " = " + scalar(cert.phi()[i]) + " does not divide l_" + at +
                 " * eps_" + std::to_string(j + 1) + " = " + scalar(le);
    } else {
        reason = "row " + std::to_string(i + 1) + " is past rank(B) = " + std::to_string(cert.t) + " but l_" + at +
                 " * eps_" + std::to_string(j + 1) + " = " + scalar(le) + " is nonzero";
    }
    o.note("solvable", false, "unsolvable: " + reason + " at cell " + at);
    o.note("failing_cell", json::array({i + 1, j + 1}), "");
    o.note("reason", reason, "");
    o.note("n", cert.n, "");
    o.note("k", cert.k, "");
    o.note("t", cert.t, "");
    o.matrix("L", cert.L);
}

template <EuclideanDomain T>
int cmd_snf(const Arguments& args, std::ostream& out) {
    const auto m = read_matrix_file<T>(args.files[0]);
    const auto sd = smith(m);
    Output<T> o(args.config.json);
    o.note("rank", sd.rank, "rank " + std::to_string(sd.rank));
    o.note("invariant_factors", scalars(sd.inv_factors), "invariant factors:" + (sd.inv_factors.empty() ? std::string() : " " + join(sd.inv_factors)));
    o.matrix("P", sd.P);
    o.matrix("Pinv", sd.Pinv);
    o.matrix("E", sd.E());
    o.matrix("Q", sd.Q);
    o.matrix("Qinv", sd.Qinv);
    o.flush(out);
    return kOk;
}

template <EuclideanDomain T>
int cmd_hnf(const Arguments& args, std::ostream& out) {
    const auto m = read_matrix_file<T>(args.files[0]);
    const auto hd = hermite_col(m);
    Output<T> o(args.config.json);
    o.note("rank", hd.rank, "rank " + std::to_string(hd.rank));
    o.matrix("H", hd.H);
    o.matrix("W", hd.W);
    o.flush(out);
    return kOk;
}

template <EuclideanDomain T>
int cmd_solve(const Arguments& args, std::ostream& out) {
    const auto b = read_matrix_file<T>(args.files[0]);
    const auto a = read_matrix_file<T>(args.files[1]);
    const auto cert = certify(b, a);
    Output<T> o(args.config.json);
    if (!cert.solvable) {
        describe_failure(o, cert);
        o.flush(out);
        return kFalse;
    }
    const auto ss = build_solution_set(cert);
    const std::string dims = "n=" + std::to_string(ss.n) + " k=" + std::to_string(ss.k) + " t=" + std::to_string(ss.t);
    o.note("solvable", true, "solvable " + dims);
    o.note("n", ss.n, "");
    o.note("k", ss.k, "");
    o.note("t", ss.t, "");

    if (args.command == "gcd" || args.gcd) {
        o.matrix("F", left_gcd(ss));
        if (args.config.witness) o.matrix("M", cofactor(ss, zero_parameter(ss)));
    } else if (args.command == "lcm" || args.lcm) {
        o.matrix("N", left_lcm(ss));
        if (args.config.witness) o.matrix("K", lcm_projector(ss));
    } else if (args.particular) {
        o.matrix("C", particular_solution(ss));
    } else if (!args.params_file.empty()) {
        const auto tmat = read_matrix_file<T>(args.params_file);
        const std::size_t free = ss.n - ss.t;
        if (tmat.rows() != free || tmat.cols() != ss.n)
            throw DimensionMismatch("--with-params: expected a " + std::to_string(free) + "x" + std::to_string(ss.n) +
                                    " matrix [T3 T4], got " + tmat.shape());
        const SolutionParameter<T> p{block_extract(tmat, 0, 0, free, ss.t), block_extract(tmat, 0, ss.t, free, free)};
        o.matrix("X", general_solution(ss, p));
    } else {
        o.note("parametrization", "X = U * [S; T] * Qinv, T any (n-t) x n matrix [T3 T4]",
               "X = U * [S; T] * Qinv, T any (n-t) x n matrix [T3 T4]");
        o.matrix("U", ss.U);
        o.matrix("S", ss.fixed_rows());
        o.matrix("Qinv", ss.Qinv);
    }
    o.flush(out);
    return kOk;
}

template <EuclideanDomain T>
int cmd_annihilator(const Arguments& args, std::ostream& out) {
    const auto b = read_matrix_file<T>(args.files[0]);
    if (!b.is_square()) throw DimensionMismatch("annihilator: B must be square, got " + b.shape());
    const auto sd = smith(b);
    Output<T> o(args.config.json);
    o.note("t", sd.rank, "rank(B) = " + std::to_string(sd.rank));
    if (args.params_file.empty()) {
        o.matrix("generators", annihilator_generators(sd));
    } else {
        o.matrix("Z", annihilator_element(sd, {read_matrix_file<T>(args.params_file)}));
    }
    o.flush(out);
    return kOk;
}

template <EuclideanDomain T>
int cmd_divides(const Arguments& args, std::ostream& out) {
    const auto d = read_matrix_file<T>(args.files[0]);
    const auto a = read_matrix_file<T>(args.files[1]);
    const auto r = args.right ? right_divides(d, a) : left_divides(d, a);
    Output<T> o(args.config.json);
    o.note("divides", r.holds, "");
    o.line(r.holds ? "true" : "false");
    if (r.holds && args.config.witness) o.matrix(args.right ? "G" : "W", *r.witness);
    o.flush(out);
    return r.holds ? kOk : kFalse;
}

template <EuclideanDomain T>
int cmd_verify(const Arguments& args, std::ostream& out) {
    const auto b = read_matrix_file<T>(args.files[0]);
    const auto a = read_matrix_file<T>(args.files[1]);
    BatteryOptions options;
    options.trials = args.config.trials.value_or(0);
    options.seed = args.config.seed.value_or(kDefaultSeed);
    const auto results = run_battery(b, a, options);
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    if (args.config.json) {
        json checks = json::array();
        for (const auto& r : results) checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        out << json{{"passed", all}, {"checks", checks}}.dump(2) << "\n";
    } else {
        out << format_report(results);
    }
    return all ? kOk : kFalse;
}

template <EuclideanDomain T>
int dispatch(const Arguments& args, std::ostream& out) {
    const std::string& c = args.command;
    if (c == "snf") return cmd_snf<T>(args, out);
    if (c == "hnf") return cmd_hnf<T>(args, out);
    if (c == "solve" || c == "gcd" || c == "lcm") return cmd_solve<T>(args, out);
    if (c == "annihilator") return cmd_annihilator<T>(args, out);
    if (c == "divides") return cmd_divides<T>(args, out);
    return cmd_verify<T>(args, out);
}

} // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solver for the matrix equation B*X = A over Z and Q[x]", "matdiv"};
    app.require_subcommand(1);
    app.fallthrough();

    Arguments args;
    std::string ring = "int";
    app.add_option("--ring", ring, "Scalar domain of the matrix files")
        ->check(CLI::IsMember({"int", "polyq"}))
        ->capture_default_str();
    app.add_flag("--json", args.config.json, "Emit JSON instead of matrix blocks");

    auto positional = [&](CLI::App* sub, std::vector<std::string> names) {
        for (std::size_t i = 0; i < names.size(); ++i)
            sub->add_option(names[i], args.files[i], names[i] + " matrix file")->required();
    };

    auto* snf = app.add_subcommand("snf", "Smith normal form with transforms P, Q and inverses");
    positional(snf, {"M"});
    auto* hnf = app.add_subcommand("hnf", "Column Hermite normal form H = M*W");
    positional(hnf, {"M"});

    auto* solve = app.add_subcommand("solve", "Decide and parametrize B*X = A");
    positional(solve, {"B", "A"});
    auto* particular = solve->add_flag("--particular", args.particular, "Print the zero-parameter solution");
    auto* with_params =
        solve->add_option("--with-params", args.params_file, "Matrix [T3 T4] of free rows; print X for it");
    auto* gcd_flag = solve->add_flag("--gcd", args.gcd, "Print the left g.c.d. of all solutions");
    auto* lcm_flag = solve->add_flag("--lcm", args.lcm, "Print the left l.c.m. of all solutions");
    particular->excludes(with_params)->excludes(gcd_flag)->excludes(lcm_flag);
    with_params->excludes(gcd_flag)->excludes(lcm_flag);
    gcd_flag->excludes(lcm_flag);

    auto* gcd = app.add_subcommand("gcd", "Left g.c.d. F of all solutions of B*X = A");
    positional(gcd, {"B", "A"});
    gcd->add_flag("--witness", args.config.witness, "Also print M with F*M = N");
    auto* lcm = app.add_subcommand("lcm", "Left l.c.m. N of all solutions of B*X = A");
    positional(lcm, {"B", "A"});
    lcm->add_flag("--witness", args.config.witness, "Also print K with K*X = N for every solution X");

    auto* ann = app.add_subcommand("annihilator", "Generators of the right annihilator of B");
    positional(ann, {"B"});
    ann->add_option("--with-params", args.params_file, "Matrix D; print U*[0; D]");

    auto* div = app.add_subcommand("divides", "Does D left-divide A (D*W = A)?");
    positional(div, {"D", "A"});
    div->add_flag("--right", args.right, "Test right divisibility instead (G*D = A)");
    div->add_flag("--witness", args.config.witness, "Print the witness");

    auto* verify = app.add_subcommand("verify", "Run the cross-check battery");
    positional(verify, {"B", "A"});
    verify->add_option("--trials", args.config.trials, "Randomized perturbations")->check(CLI::Range(1u, 100000u));
    verify->add_option("--seed", args.config.seed, "Random seed");

    std::vector<const char*> raw{"matdiv"};
    for (const auto& a : argv) raw.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    args.command = app.get_subcommands().front()->get_name();
    args.config.ring = ring == "polyq" ? Ring::PolyQ : Ring::Int;
    try {
        return args.config.ring == Ring::Int ? dispatch<Integer>(args, out) : dispatch<PolyQ>(args, out);
    } catch (const ParseError& e) {
        err << "matdiv: " << e.what() << "\n";
    } catch (const DimensionMismatch& e) {
        err << "matdiv: " << e.what() << "\n";
    }
    return kUsage;
}

} // namespace matdiv::cli
