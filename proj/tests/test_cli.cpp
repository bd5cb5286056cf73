#include "doctest.h"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "matdiv/gcd_lcm.hpp"
#include "matdiv/matrix_io.hpp"
#include "support.hpp"

using namespace matdiv;
using namespace matdiv::testing;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Scratch {
public:
    Scratch() {
        static int counter = 0;
        dir_ = fs::temp_directory_path() / ("matdiv_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& content) const {
        const auto p = dir_ / name;
        std::ofstream(p) << content;
        return p.string();
    }

    template <class T>
    std::string write(const std::string& name, const Matrix<T>& m) const {
        return write(name, format_matrix(m));
    }

private:
    fs::path dir_;
};

// The matrix printed after the line "# name".
template <class T>
Matrix<T> block(const std::string& text, const std::string& name) {
    const std::string header = "# " + name + "\n";
    const auto at = text.find(header);
    REQUIRE(at != std::string::npos);
    std::istringstream in(text.substr(at + header.size()));
    std::string dims;
    std::getline(in, dims);
    std::istringstream d(dims);
    std::size_t rows = 0;
    d >> rows;
    std::string body = dims + "\n", line;
    for (std::size_t i = 0; i < rows && std::getline(in, line); ++i) body += line + "\n";
    return parse_matrix<T>(body);
}

} // namespace

TEST_CASE("printed matrices parse back to themselves") {
    Rng rng(91);
    for (int i = 0; i < 40; ++i) {
        const auto r = static_cast<std::size_t>(uniform(rng, 0, 4));
        const auto c = static_cast<std::size_t>(uniform(rng, 0, 4));
        const IMat m = random_int_matrix(rng, r, c, -1000, 1000);
        CHECK(parse_matrix<Integer>(format_matrix(m)) == m);
        const PMat p = random_poly_matrix(rng, r, c, 3, 7);
        CHECK(parse_matrix<PolyQ>(format_matrix(p)) == p);
    }
    const PMat q{{PolyQ{Rational(1, 3), Rational(-5, 2)}, PolyQ{}}};
    CHECK(parse_matrix<PolyQ>(format_matrix(q)) == q);
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_matrix<Integer>("# comment\n2 2\n1 2\n3 4x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(e.column() == 4);
    }
    Scratch s;
    const auto bad = s.write("bad.mat", "1 1\n[1,\n");
    const auto r = invoke({"--ring", "polyq", "snf", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"--ring", "gf7", "snf", "x"}).code == 2);
    Scratch s;
    const auto b = s.write("b.mat", worked_B());
    const auto a = s.write("a.mat", worked_A());
    CHECK(invoke({"solve", "--gcd", "--lcm", b, a}).code == 2);
    CHECK(invoke({"solve", b, s.write("r.mat", IMat(3, 7))}).code == 2);
    CHECK(invoke({"snf", (fs::temp_directory_path() / "matdiv-no-such-dir" / "nope.mat").string()}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("repeated runs are byte-identical") {
    Scratch s;
    const auto b = s.write("b.mat", worked_B());
    const auto a = s.write("a.mat", worked_A());
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"snf", b}, {"hnf", b}, {"solve", b, a}, {"gcd", "--witness", b, a},
          {"--json", "lcm", "--witness", b, a}, {"verify", "--trials", "5", b, a}}) {
        const auto first = invoke(args);
        const auto second = invoke(args);
        CHECK(first.code == 0);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("solve --gcd reproduces the worked g.c.d.") {
    Scratch s;
    const auto b = s.write("b.mat", worked_B());
    const auto a = s.write("a.mat", worked_A());
    const auto r = invoke({"solve", "--gcd", b, a});
    REQUIRE(r.code == 0);
    const auto f = block<Integer>(r.out, "F");
    CHECK(worked_B() * f == worked_A());
    CHECK(mutually_associate(f, worked_F()));

    const auto l = invoke({"lcm", "--witness", b, a});
    REQUIRE(l.code == 0);
    const auto n = block<Integer>(l.out, "N");
    CHECK(mutually_right_divisible(n, worked_N()));
    CHECK(block<Integer>(l.out, "K") * f == n);
}

TEST_CASE("solve modes") {
    Scratch s;
    const auto b = s.write("b.mat", worked_B());
    const auto a = s.write("a.mat", worked_A());

    const auto c = invoke({"solve", "--particular", b, a});
    REQUIRE(c.code == 0);
    CHECK(worked_B() * block<Integer>(c.out, "C") == worked_A());

    Rng rng(17);
    const auto t = s.write("t.mat", random_int_matrix(rng, 2, 7, -3, 3));
    const auto x = invoke({"solve", "--with-params", t, b, a});
    REQUIRE(x.code == 0);
    CHECK(worked_B() * block<Integer>(x.out, "X") == worked_A());
    CHECK(invoke({"solve", "--with-params", s.write("t2.mat", IMat(3, 7)), b, a}).code == 2);

    const auto p = invoke({"solve", b, a});
    REQUIRE(p.code == 0);
    const auto u = block<Integer>(p.out, "U");
    const auto top = block<Integer>(p.out, "S");
    const auto qinv = block<Integer>(p.out, "Qinv");
    const IMat free = random_int_matrix(rng, 2, 7, -3, 3);
    CHECK(worked_B() * (u * block_compose<Integer>({{top}, {free}}) * qinv) == worked_A());
}

TEST_CASE("unsolvable systems report the failing cell") {
    Scratch s;
    const auto r = invoke({"solve", s.write("b.mat", IMat{{2, 0}, {0, 2}}), s.write("a.mat", IMat{{1, 0}, {0, 1}})});
    CHECK(r.code == 1);
    CHECK(r.out.find("unsolvable") != std::string::npos);
    CHECK(r.out.find("(1,1)") != std::string::npos);

    const auto j = invoke({"--json", "gcd", s.write("b2.mat", IMat{{1, 0}, {0, 0}}), s.write("a2.mat", IMat{{0, 0}, {0, 1}})});
    CHECK(j.code == 1);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["solvable"] == false);
    CHECK(doc["failing_cell"][0] == 2);  // past rank(B) = 1
}

TEST_CASE("divides") {
    Scratch s;
    const auto two = s.write("two.mat", IMat{{2, 0}, {0, 2}});
    const auto id = s.write("id.mat", IMat::identity(2));
    const auto no = invoke({"divides", two, id});
    CHECK(no.code == 1);
    CHECK(no.out == "false\n");
    const auto yes = invoke({"divides", "--witness", id, two});
    CHECK(yes.code == 0);
    CHECK(block<Integer>(yes.out, "W") == IMat{{2, 0}, {0, 2}});

    const auto d = s.write("d.mat", IMat{{1, 1}, {0, 1}});
    const auto a = s.write("a.mat", IMat{{1, 3}, {2, 5}});
    const auto r = invoke({"divides", "--right", "--witness", d, a});
    CHECK(r.code == 0);
    CHECK(block<Integer>(r.out, "G") * IMat{{1, 1}, {0, 1}} == IMat{{1, 3}, {2, 5}});
}

TEST_CASE("annihilator") {
    Scratch s;
    const auto b = s.write("b.mat", worked_B());
    const auto r = invoke({"annihilator", b});
    REQUIRE(r.code == 0);
    const auto gens = block<Integer>(r.out, "generators");
    CHECK(gens.cols() == 2);
    CHECK((worked_B() * gens).is_zero());
    const auto z = invoke({"annihilator", "--with-params", s.write("d.mat", IMat{{1, 2, 0, 0, 0, 0, 5}, {3, 4, 0, -1, 0, 0, 0}}), b});
    REQUIRE(z.code == 0);
    CHECK((worked_B() * block<Integer>(z.out, "Z")).is_zero());
}

TEST_CASE("polynomial ring from the command line") {
    Scratch s;
    const auto b = s.write("b.mat", "2 2\n[1,1] [0]\n[0] [0,1]\n");
    const auto a = s.write("a.mat", "2 2\n[1,2,1] [0]\n[0] [0,1]\n");
    const auto r = invoke({"--ring", "polyq", "gcd", b, a});
    REQUIRE(r.code == 0);
    CHECK(block<PolyQ>(r.out, "F") == PMat{{PolyQ{1, 1}, PolyQ{}}, {PolyQ{}, PolyQ{1}}});
    CHECK(invoke({"verify", "--ring", "polyq", "--trials", "3", b, a}).code == 0);
    CHECK(invoke({"snf", b}).code == 2);
}

TEST_CASE("verify on the worked instance") {
    Scratch s;
    const auto b = s.write("b.mat", worked_B());
    const auto a = s.write("a.mat", worked_A());
    const auto r = invoke({"verify", "--trials", "50", "--seed", "7", b, a});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("trial-50:") != std::string::npos);
    CHECK(invoke({"verify", "--trials", "0", b, a}).code == 2);
}
