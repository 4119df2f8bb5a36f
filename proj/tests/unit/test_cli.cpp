#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "kempe/cli.hpp"
#include "kempe/io.hpp"

using namespace kempe;
namespace fx = kempe::fixtures;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = kempe::cli::run(args, out, err);
  return Run{code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    dir_ = std::filesystem::temp_directory_path() /
           ("kempe_cli_test_" + std::to_string(counter_++));
    std::filesystem::create_directories(dir_);
  }
  ~TempDir() { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) const {
    auto path = dir_ / name;
    std::ofstream(path) << content;
    return path.string();
  }

 private:
  std::filesystem::path dir_;
  static inline int counter_ = 0;
};

std::string prism_json() {
  return graph_to_json(fx::prism()).dump();
}
std::string near_prism_json() {
  return graph_to_json(fx::near_prism()).dump();
}

}  // namespace

TEST_CASE("graph and coloring json round trips") {
  Graph g = fx::prism();
  CHECK(graph_from_json(graph_to_json(g)) == g);
  Coloring f({{1, 5}, {2, 6}, {3, 4}});
  CHECK(coloring_from_json(coloring_to_json(f)) == f);
  auto seq = sequence_from_json(sequence_to_json({f, f.padded_to(4)}));
  CHECK(seq.size() == 2);
  CHECK_THROWS_AS(graph_from_json(Json::parse("{\"edges\": []}")), DomainError);
  CHECK_THROWS_AS(coloring_from_json(Json::parse("{\"classes\": [[1],[1]]}")), DomainError);
}

TEST_CASE("polynomial text form") {
  Graph g = fx::near_prism();
  VariableTable table(g);
  auto order = MonomialOrder::grevlex_default(table.size());
  Monomial a = Monomial::variable(table.index_of({1, 5})).times(Monomial::variable(table.index_of({3, 4})));
  Monomial b = Monomial::variable(table.index_of({1, 3, 5})).times(Monomial::variable(table.index_of({4})));
  CHECK(polynomial_text(binomial_difference(a, b), order, table) ==
        "x{1,5}*x{3,4} - x{1,3,5}*x{4}");
  CHECK(polynomial_text(Polynomial::zero(), order, table) == "0");
  CHECK(monomial_text(Monomial::one(), table) == "1");
  CHECK(monomial_text(Monomial::variable(0, 2), table) == "x{}^2");
}

TEST_CASE("cli equiv, sequence and class commands") {
  TempDir tmp;
  auto near = tmp.write("near.json", near_prism_json());
  auto prism = tmp.write("prism.json", prism_json());
  auto f = tmp.write("f.json", R"({"classes": [[1,5],[2,6],[3,4]]})");
  auto g52 = tmp.write("g52.json", R"({"classes": [[1,3,5],[2,6],[4]]})");
  auto g53 = tmp.write("g53.json", R"({"classes": [[1,6],[2,4],[3,5]]})");

  auto positive = run_cli({"equiv", "--graph", near, "--f", f, "--g", g52});
  CHECK(positive.code == 0);
  CHECK(Json::parse(positive.out)["equivalent"] == true);

  auto negative = run_cli({"equiv", "--graph", prism, "--f", f, "--g", g53});
  CHECK(negative.code == 0);
  CHECK(Json::parse(negative.out)["equivalent"] == false);

  auto self_seq = run_cli({"sequence", "--graph", near, "--f", f, "--g", f});
  CHECK(self_seq.code == 0);
  auto parsed = Json::parse(self_seq.out);
  CHECK(parsed["equivalent"] == true);
  CHECK(parsed["length"] == 1);

  auto seq = run_cli({"sequence", "--graph", near, "--f", f, "--g", g52});
  CHECK(seq.code == 0);
  auto seq_json = Json::parse(seq.out);
  CHECK(seq_json["equivalent"] == true);

  // The emitted sequence passes the oracle verifier end to end.
  auto seq_file = tmp.write("seq.json", seq_json["sequence"].dump());
  auto verify = run_cli({"oracle", "verify", "--graph", near, "--seq", seq_file});
  CHECK(verify.code == 0);
  CHECK(Json::parse(verify.out)["ok"] == true);

  auto not_eq_seq = run_cli({"sequence", "--graph", prism, "--f", f, "--g", g53});
  CHECK(not_eq_seq.code == 0);
  CHECK(Json::parse(not_eq_seq.out)["equivalent"] == false);

  auto class_of = run_cli({"class-of", "--graph", near, "--coloring", f});
  CHECK(class_of.code == 0);
  CHECK(Json::parse(class_of.out)["size"].get<int>() > 1);
}

TEST_CASE("cli stable-sets, hilbert, reps and classes") {
  TempDir tmp;
  auto prism = tmp.write("prism.json", prism_json());

  auto sets = run_cli({"stable-sets", "--graph", prism});
  CHECK(sets.code == 0);
  auto sets_json = Json::parse(sets.out);
  CHECK(sets_json["count"] == 13);
  CHECK(sets_json["stable_sets"][7] == Json::parse("[1,5]"));

  auto hilbert = run_cli({"hilbert", "--graph", prism, "--max-k", "5"});
  CHECK(hilbert.code == 0);
  CHECK(Json::parse(hilbert.out)["values"] == Json::parse("[1,13,49,65,64,64]"));

  auto reps = run_cli({"reps", "--graph", prism, "--k", "3"});
  CHECK(reps.code == 0);
  auto reps_json = Json::parse(reps.out);
  CHECK(reps_json["all_count"] == 65);
  CHECK(reps_json["full_count"] == 2);

  auto classes_a = run_cli({"classes", "--graph", prism, "--k", "3"});
  CHECK(Json::parse(classes_a.out)["count"] == 2);
  auto classes_b = run_cli({"classes", "--graph", prism, "--k", "3", "--method", "b"});
  CHECK(Json::parse(classes_b.out)["count"] == 2);

  auto oracle_classes = run_cli({"oracle", "classes", "--graph", prism, "--k", "3"});
  CHECK(Json::parse(oracle_classes.out)["class_count"] == 2);

  auto text = run_cli({"classes", "--graph", prism, "--k", "3", "--format", "text"});
  CHECK(text.out == "2\n");
}

TEST_CASE("cli ideal and groebner output") {
  TempDir tmp;
  auto near = tmp.write("near.json", near_prism_json());
  auto gens = run_cli({"ideal", "--graph", near, "--which", "J"});
  CHECK(gens.code == 0);
  auto gens_json = Json::parse(gens.out);
  CHECK(gens_json["which"] == "J");
  CHECK(gens_json["groebner"] == false);
  CHECK(gens_json["count"].get<int>() > 0);

  auto basis = run_cli({"groebner", "--graph", near, "--which", "K"});
  CHECK(basis.code == 0);
  CHECK(Json::parse(basis.out)["groebner"] == true);

  auto toric = run_cli({"ideal", "--graph", near, "--which", "I"});
  CHECK(toric.code == 0);
  CHECK(Json::parse(toric.out)["groebner"] == true);

  auto kb = run_cli({"kempe-basis", "--graph", near});
  CHECK(kb.code == 0);
  CHECK(Json::parse(kb.out)["count"].get<int>() > 0);
}

TEST_CASE("cli determinism") {
  TempDir tmp;
  auto prism = tmp.write("prism.json", prism_json());
  auto first = run_cli({"reps", "--graph", prism, "--k", "3"});
  auto second = run_cli({"reps", "--graph", prism, "--k", "3"});
  CHECK(first.out == second.out);
}

TEST_CASE("cli explicit orders") {
  TempDir tmp;
  auto prism = tmp.write("prism.json", prism_json());
  // The table order itself, listed smallest first.
  VariableTable table(fx::prism());
  Json order = Json::array();
  for (const auto& s : table.stable_sets()) order.push_back(s);
  auto order_file = tmp.write("order.json", order.dump());
  auto run = run_cli({"hilbert", "--graph", prism, "--max-k", "3", "--order", order_file});
  CHECK(run.code == 0);
  CHECK(Json::parse(run.out)["values"] == Json::parse("[1,13,49,65]"));

  // A reversed order still counts the same classes.
  Json reversed = Json::array();
  for (auto it = order.rbegin(); it != order.rend(); ++it) reversed.push_back(*it);
  auto reversed_file = tmp.write("reversed.json", reversed.dump());
  auto reversed_run = run_cli({"classes", "--graph", prism, "--k", "3", "--order", reversed_file});
  CHECK(reversed_run.code == 0);
  CHECK(Json::parse(reversed_run.out)["count"] == 2);

  // Not a permutation of the table: rejected.
  Json truncated = order;
  truncated.erase(truncated.size() - 1);
  auto truncated_file = tmp.write("truncated.json", truncated.dump());
  CHECK(run_cli({"hilbert", "--graph", prism, "--max-k", "2", "--order", truncated_file}).code == 1);
}

TEST_CASE("cli error taxonomy") {
  TempDir tmp;
  auto prism = tmp.write("prism.json", prism_json());
  auto bad_json = tmp.write("bad.json", "{\"vertices\": ");
  auto bad = run_cli({"stable-sets", "--graph", bad_json});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("malformed JSON") != std::string::npos);

  CHECK(run_cli({"unknown-subcommand"}).code == 1);
  CHECK(run_cli({"ideal", "--graph", prism, "--which", "Z"}).code == 1);
  CHECK(run_cli({"stable-sets", "--graph", tmp.write("missing_dir/nope.json", "")}).code == 1);

  // Over the oracle caps: resource error.
  auto big = tmp.write("big.json", graph_to_json(Graph(10, {})).dump());
  auto capped = run_cli({"oracle", "classes", "--graph", big, "--k", "2"});
  CHECK(capped.code == 2);

  auto f = tmp.write("f.json", R"({"classes": [[1,5],[2,6],[3,4]]})");
  auto g4 = tmp.write("g4.json", R"({"classes": [[1,6],[2,4],[3,5],[]]})");
  CHECK(run_cli({"equiv", "--graph", prism, "--f", f, "--g", g4}).code == 1);

  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("regression suite") {
  auto all = kempe::cli::run_regression_suite();
  CHECK(all.size() == 10);
  for (const auto& item : all) {
    INFO(item.name, ": ", item.detail);
    CHECK(item.pass);
  }

  auto subset = kempe::cli::run_regression_suite("hilbert");
  CHECK(subset.size() == 3);
  CHECK_THROWS_AS(kempe::cli::run_regression_suite("no-such-item"), DomainError);

  auto through_cli = run_cli({"paper-suite", "--only", "stable-set-table"});
  CHECK(through_cli.code == 0);
  CHECK(Json::parse(through_cli.out)["pass"] == true);
  CHECK(run_cli({"paper-suite", "--only", "no-such-item"}).code == 1);
}
