// Command-line front end. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 success, 1 mathematical failure, 2 usage or parse error.

#include <tmm/tmm.h>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Failure {
  int code;
};

int status_exit(tmm_status s) {
  switch (s) {
    case TMM_OK: return kOk;
    case TMM_ERR_ARGUMENT:
    case TMM_ERR_PARSE:
    case TMM_ERR_DOMAIN: return kUsage;
    default: return kFail;
  }
}

void check(tmm_status s, const std::string& input = {}) {
  if (s == TMM_OK) return;
  std::cerr << "error: " << tmm_last_error() << "\n";
  const int64_t pos = tmm_last_error_position();
  if (s == TMM_ERR_PARSE && pos >= 0 && !input.empty() && static_cast<std::size_t>(pos) <= input.size()) {
    std::cerr << "  " << input << "\n  " << std::string(static_cast<std::size_t>(pos), ' ') << "^\n";
  }
  throw Failure{status_exit(s)};
}

struct StrFree {
  void operator()(char* p) const { tmm_string_free(p); }
};
using Str = std::unique_ptr<char, StrFree>;

struct ExpansionFree {
  void operator()(tmm_expansion* e) const { tmm_expansion_free(e); }
};
struct BraidFree {
  void operator()(tmm_braid* b) const { tmm_braid_free(b); }
};
struct CycleFree {
  void operator()(tmm_cycle* c) const { tmm_cycle_free(c); }
};
using Expansion = std::unique_ptr<tmm_expansion, ExpansionFree>;
using Braid = std::unique_ptr<tmm_braid, BraidFree>;
using Cycle = std::unique_ptr<tmm_cycle, CycleFree>;

void print(char* json) {
  Str s(json);
  std::cout << s.get() << "\n";
}

int env_degree() {
  const char* v = std::getenv("TMM_DEGREE");
  if (!v || !*v) return 2;
  char* end = nullptr;
  const long d = std::strtol(v, &end, 10);
  if (*end != '\0' || d < 1 || d > 12) {
    std::cerr << "error: TMM_DEGREE must be an integer in 1..12\n";
    throw Failure{kUsage};
  }
  return static_cast<int>(d);
}

Expansion load_expansion(int n, int degree, const std::string& path) {
  tmm_expansion* e = nullptr;
  if (path.empty()) {
    check(tmm_expansion_standard(n, degree, &e));
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot read " << path << "\n";
      throw Failure{kUsage};
    }
    std::stringstream ss;
    ss << in.rdbuf();
    check(tmm_expansion_from_json(n, degree, ss.str().c_str(), &e));
  }
  return Expansion(e);
}

Braid load_braid(int n, const std::string& text) {
  tmm_braid* b = nullptr;
  check(tmm_braid_parse(n, text.c_str(), &b), text);
  return Braid(b);
}

tmm_form parse_form(const std::string& f) {
  if (f == "tensor") return TMM_FORM_TENSOR;
  if (f == "exterior") return TMM_FORM_EXTERIOR;
  return TMM_FORM_HOM;
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      std::cerr << "error: malformed partition '" << text << "'\n";
      throw Failure{kUsage};
    }
  }
  return parts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Magnus expansions, tau_1 and the classes hbar_p on braid groups"};
  app.require_subcommand(1);
  app.fallthrough();  // --seed may follow the subcommand
  std::uint64_t seed = tmm_default_seed();
  app.add_option("--seed", seed, "seed for randomized checks");

  int n = 0;
  int degree = 0;
  std::string expansion_path;
  std::string text;

  auto* expand = app.add_subcommand("expand", "truncated Magnus expansion of a word");
  expand->add_option("--n", n, "rank of the free group")->required();
  expand->add_option("--degree", degree, "truncation degree (default: TMM_DEGREE or 2)");
  expand->add_option("--expansion", expansion_path, "JSON file with custom tails");
  expand->add_option("word", text, "word such as \"x1 x2^-1\"");

  auto* tau1 = app.add_subcommand("tau1", "tau_1 of xi(braid)");
  tau1->add_option("--n", n, "number of strands")->required();
  tau1->add_option("--expansion", expansion_path, "JSON file with custom tails");
  tau1->add_option("braid", text, "braid word")->required();

  int p = 1;
  std::string form = "tensor";
  auto* hbar = app.add_subcommand("hbar", "evaluate h_p or hbar_p on a tuple of braids");
  hbar->add_option("--p", p, "degree")->required();
  hbar->add_option("--n", n, "number of strands")->required();
  hbar->add_option("--tuple", text, "\"g1;g2;...\"")->required();
  hbar->add_option("--form", form, "tensor, exterior or hom")->check(CLI::IsMember({"tensor", "exterior", "hom"}));
  hbar->add_option("--expansion", expansion_path, "JSON file with custom tails");

  std::string lambda;
  auto* pair = app.add_subcommand("pair", "pair hbar_p or hbar_lambda with a bar cycle");
  pair->add_option("--n", n, "number of strands")->required();
  pair->add_option("--cycle", text, "torus:g1|g2, cross:torus:... * torus:..., or unit")->required();
  auto* p_opt = pair->add_option("--p", p, "degree of hbar_p");
  pair->add_option("--lambda", lambda, "comma-separated parts, cup product of hbar_parts")->excludes(p_opt);
  std::string pair_form = "exterior";
  pair->add_option("--form", pair_form, "exterior or tensor")->check(CLI::IsMember({"tensor", "exterior"}));
  pair->add_option("--expansion", expansion_path, "JSON file with custom tails");

  std::vector<std::string> braids;
  auto* beq = app.add_subcommand("braid-eq", "decide equality of two braids");
  beq->add_option("--n", n, "number of strands")->required();
  beq->add_option("braids", braids, "two braid words")->expected(2)->required();

  auto* perm = app.add_subcommand("perm", "permutation of a braid");
  perm->add_option("--n", n, "number of strands")->required();
  perm->add_option("braid", text, "braid word")->required();

  auto* xi = app.add_subcommand("xi", "Artin automorphism of a braid");
  xi->add_option("--n", n, "number of strands")->required();
  xi->add_option("braid", text, "braid word")->required();

  int q = 0;
  int depth = 3;
  std::string out_path;
  auto* indep = app.add_subcommand("independence", "linear-independence certificate for P_n in degree q");
  indep->add_option("--n", n, "number of strands")->required();
  indep->add_option("--q", q, "degree")->required();
  indep->add_option("--catalog-depth", depth, "torus cycles tried per block");
  indep->add_option("--out", out_path, "write the certificate here instead of stdout");

  int samples = 8;
  auto* assertion = app.add_subcommand("assertion-a", "scalar identity for hbar_lambda on the block subgroup");
  assertion->add_option("--lambda", lambda, "comma-separated parts")->required();
  assertion->add_option("--n", n, "number of strands")->required();
  assertion->add_option("--samples", samples, "random torus cycles");

  std::string suite;
  auto* checks = app.add_subcommand("check", "run a named suite of exact checks");
  checks->add_option("--suite", suite, "lemmas, cocycle, primitivity, expansion-independence, independence-small")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    char* json = nullptr;
    if (*expand) {
      const int N = degree > 0 ? degree : env_degree();
      const Expansion e = load_expansion(n, N, expansion_path);
      check(tmm_expand(e.get(), text.c_str(), &json), text);
      print(json);
    } else if (*tau1) {
      const Expansion e = load_expansion(n, std::max(2, env_degree()), expansion_path);
      const Braid b = load_braid(n, text);
      check(tmm_tau1(e.get(), b.get(), &json));
      print(json);
    } else if (*hbar) {
      const Expansion e = load_expansion(n, std::max(2, env_degree()), expansion_path);
      check(tmm_hbar(e.get(), p, text.c_str(), parse_form(form), &json), text);
      print(json);
    } else if (*pair) {
      const Expansion e = load_expansion(n, std::max(2, env_degree()), expansion_path);
      tmm_cycle* c = nullptr;
      check(tmm_cycle_parse(n, text.c_str(), &c), text);
      const Cycle cycle(c);
      std::vector<int> parts;
      if (!lambda.empty()) {
        parts = parse_parts(lambda);
      } else if (*p_opt) {
        parts = {p};
      } else {
        int d = 0;
        check(tmm_cycle_degree(cycle.get(), &d));
        parts = {d};
      }
      check(tmm_pair(e.get(), parts.data(), parts.size(), parse_form(pair_form), cycle.get(), &json));
      print(json);
    } else if (*beq) {
      const Braid a = load_braid(n, braids[0]);
      const Braid b = load_braid(n, braids[1]);
      int equal = 0;
      check(tmm_braid_equal(a.get(), b.get(), &equal));
      std::cout << "{\n  \"equal\": " << (equal ? "true" : "false") << "\n}\n";
    } else if (*perm) {
      const Braid b = load_braid(n, text);
      check(tmm_braid_permutation(b.get(), &json));
      print(json);
    } else if (*xi) {
      const Braid b = load_braid(n, text);
      check(tmm_braid_xi(b.get(), &json));
      print(json);
    } else if (*indep) {
      int pass = 0;
      check(tmm_certificate(n, q, depth, &json, &pass));
      Str cert(json);
      if (out_path.empty()) {
        std::cout << cert.get() << "\n";
      } else {
        std::ofstream out(out_path);
        out << cert.get() << "\n";
        if (!out) {
          std::cerr << "error: cannot write " << out_path << "\n";
          return kUsage;
        }
        std::cout << "{\n  \"out\": \"" << out_path << "\",\n  \"verdict\": \""
                  << (pass ? "pass" : "inconclusive-catalog") << "\"\n}\n";
      }
      if (!pass) std::cerr << "rank deficit: the cycle catalog did not separate all classes\n";
      return pass ? kOk : kFail;
    } else if (*assertion) {
      const auto parts = parse_parts(lambda);
      int pass = 0;
      check(tmm_assertion_a(parts.data(), parts.size(), n, seed, samples, &json, &pass));
      print(json);
      return pass ? kOk : kFail;
    } else if (*checks) {
      int pass = 0;
      check(tmm_check_suite(suite.c_str(), seed, &json, &pass));
      print(json);
      return pass ? kOk : kFail;
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kOk;
}
