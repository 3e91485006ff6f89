#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "qtpieri/identities.hpp"
#include "qtpieri/render.hpp"

using namespace qtpieri;
using json = nlohmann::ordered_json;

namespace {

enum class Format { kPlain, kJson, kLatex };

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string lambda_text, mu_text, kind_text = "sk", op_text = "P", suite_text = "all";
  std::string output;
  int r = 1;
  int cap = -1;
  int max_size = 3;
  int max_r = 3;
  int jobs = 1;
  bool q_zero = false;
  bool check = false;
  Format format = Format::kPlain;
};

int default_cap() {
  const char* env = std::getenv("QTPIERI_CAP");
  if (env == nullptr || *env == '\0') return 5;
  try {
    std::size_t used = 0;
    const int cap = std::stoi(env, &used);
    if (used != std::strlen(env) || cap < 0) throw std::invalid_argument(env);
    return cap;
  } catch (const std::exception&) {
    throw Usage(std::string("QTPIERI_CAP must be a non-negative integer, got '") + env + "'");
  }
}

Partition parse_partition(const std::string& text, const char* flag) {
  try {
    return Partition::parse(text);
  } catch (const std::exception& e) {
    throw Usage(std::string(flag) + ": " + e.what());
  }
}

json partition_json(const Partition& p) {
  json a = json::array();
  for (int part : p.parts()) a.push_back(part);
  return a;
}

// Identity and kind names use underscores, which LaTeX text mode needs escaped.
std::string latex_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '_') out += '\\';
    out += c;
  }
  return out;
}

struct Output {
  std::string text;
  int exit_code = 0;
};

Output cmd_coeff(const Config& cfg) {
  const auto kind = parse_kind(cfg.kind_text);
  if (!kind) throw Usage("--kind must be one of vs, hs, sk, hat_sk, ks");
  const Partition lambda = parse_partition(cfg.lambda_text, "--lambda");
  const Partition mu = parse_partition(cfg.mu_text, "--mu");
  const RatFun value = pieri_coeff(*kind, lambda, mu, cfg.q_zero);

  // The product formulas for vs, hs, sk live at q = 0; hat_sk has a (q,t)
  // product; ks is checked through its vs/hat_sk summation.
  std::optional<bool> agree;
  std::string formula;
  std::string product_latex;
  if (*kind == PieriKind::kHatSk) {
    RatFun f = factored_hat_sk(lambda, mu);
    if (cfg.q_zero) f = substitute(f, {{kQ, RatFun(0)}});
    if (cfg.check) {
      formula = "hat_sk product";
      agree = f == value;
    }
    if (!cfg.q_zero) product_latex = factored_hat_sk_latex(lambda, mu);
  } else if (*kind == PieriKind::kKs) {
    if (cfg.check) {
      formula = "ks_vs_hatsk summation";
      agree = check_ks_vs_hatsk(lambda, mu).pass;
    }
  } else {
    if (cfg.check) {
      formula = "one-parameter product at q=0";
      const RatFun at_zero = cfg.q_zero ? value : pieri_coeff(*kind, lambda, mu, true);
      agree = factored_hl(*kind, lambda, mu) == at_zero;
      if (*kind == PieriKind::kSk) agree = *agree && lascoux_modified_hl(lambda, mu) == at_zero;
    }
    if (cfg.q_zero) product_latex = factored_hl_latex(*kind, lambda, mu);
  }

  Output out;
  if (agree && !*agree) out.exit_code = 1;
  switch (cfg.format) {
    case Format::kPlain:
      out.text = to_text(value) + "\n";
      if (agree) out.text += "check " + formula + ": " + (*agree ? "agree" : "disagree") + "\n";
      break;
    case Format::kJson: {
      json j;
      j["kind"] = kind_name(*kind);
      j["lambda"] = partition_json(lambda);
      j["mu"] = partition_json(mu);
      j["q_zero"] = cfg.q_zero;
      j["value"] = to_text(value);
      if (agree) j["check"] = {{"formula", formula}, {"agree", *agree}};
      out.text = j.dump() + "\n";
      break;
    }
    case Format::kLatex:
      out.text = (product_latex.empty() ? "" : product_latex + " = ") + to_latex(value) + "\n";
      if (agree) out.text += "% check " + formula + ": " + (*agree ? "agree" : "disagree") + "\n";
      break;
  }
  return out;
}

Output cmd_expand(const Config& cfg) {
  const Partition lambda = parse_partition(cfg.lambda_text, "--lambda");
  const Partition mu = parse_partition(cfg.mu_text, "--mu");
  int degree = lambda.size();
  if (cfg.op_text == "skew") {
    if (!contains(lambda, mu)) throw Usage("--mu must be contained in --lambda");
    degree -= mu.size();
  } else if (cfg.op_text == "g") {
    if (cfg.r < 0) throw Usage("--r must be non-negative");
    degree = cfg.r;
  } else if (cfg.op_text != "P" && cfg.op_text != "Q") {
    throw Usage("--op must be one of P, Q, skew, g");
  }
  const int cap = cfg.cap >= 0 ? cfg.cap : degree;
  if (cap < degree) throw Usage("--cap " + std::to_string(cap) + " is below the degree " + std::to_string(degree));

  SymFunc f(Basis::kM, cap);
  if (cfg.op_text == "P") {
    f = macdonald_P(lambda, cap);
  } else if (cfg.op_text == "Q") {
    f = macdonald_Q(lambda, cap);
  } else if (cfg.op_text == "skew") {
    f = skew_Q(lambda, mu, cap);
  } else {
    f = g_row(cfg.r, cap);
  }
  if (cfg.q_zero) f = substitute(f, {{kQ, RatFun(0)}});

  Output out;
  switch (cfg.format) {
    case Format::kPlain:
      out.text = to_text(f) + "\n";
      break;
    case Format::kJson: {
      json terms = json::array();
      for (const auto& [nu, c] : f.coeffs()) terms.push_back({{"m", partition_json(nu)}, {"coeff", to_text(c)}});
      json j;
      j["op"] = cfg.op_text;
      if (cfg.op_text == "g") {
        j["r"] = cfg.r;
      } else {
        j["lambda"] = partition_json(lambda);
      }
      if (cfg.op_text == "skew") j["mu"] = partition_json(mu);
      j["q_zero"] = cfg.q_zero;
      j["terms"] = terms;
      out.text = j.dump() + "\n";
      break;
    }
    case Format::kLatex:
      out.text = to_latex(f) + "\n";
      break;
  }
  return out;
}

std::vector<IdentityId> parse_suite(const std::string& text) {
  if (text == "all") return {std::begin(kAllIdentities), std::end(kAllIdentities)};
  std::vector<IdentityId> out;
  std::stringstream in(text);
  std::string name;
  while (std::getline(in, name, ',')) {
    const auto id = parse_identity(name);
    if (!id) throw Usage("unknown identity '" + name + "' in --suite");
    out.push_back(*id);
  }
  if (out.empty()) throw Usage("--suite is empty");
  return out;
}

json params_json(const std::vector<Param>& params) {
  json j = json::object();
  for (const auto& p : params) {
    std::visit(
        [&](const auto& v) {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, Partition>) {
            j[p.name] = partition_json(v);
          } else {
            j[p.name] = v;
          }
        },
        p.value);
  }
  return j;
}

Output cmd_verify(const Config& cfg) {
  if (cfg.max_size < 0) throw Usage("--max-size must be non-negative");
  if (cfg.max_r < 0) throw Usage("--max-r must be non-negative");
  if (cfg.cap < 0) throw Usage("--cap must be non-negative");
  if (cfg.jobs < 1) throw Usage("--jobs must be at least 1");
  SuiteOptions options;
  options.selection = parse_suite(cfg.suite_text);
  options.max_size = cfg.max_size;
  options.cap = cfg.cap;
  options.max_r = cfg.max_r;
  options.jobs = cfg.jobs;
  const auto reports = run_suite(options);

  Output out;
  std::size_t failed = 0;
  std::ostringstream text;
  if (cfg.format == Format::kLatex) text << "\\begin{tabular}{lll}\n";
  for (const auto& r : reports) {
    if (!r.pass) ++failed;
    const std::string status = r.pass ? "pass" : "fail";
    switch (cfg.format) {
      case Format::kPlain:
        text << status << ' ' << identity_name(r.id) << ' ' << params_text(r.params) << '\n';
        if (r.witness) {
          text << "  " << r.witness->part << "\n  lhs: " << r.witness->lhs << "\n  rhs: " << r.witness->rhs << '\n';
        }
        break;
      case Format::kJson: {
        json j;
        j["identity"] = identity_name(r.id);
        j["params"] = params_json(r.params);
        j["status"] = status;
        if (r.witness) j["witness"] = {{"part", r.witness->part}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
        text << j.dump() << '\n';
        break;
      }
      case Format::kLatex:
        text << "\\texttt{" << latex_escape(identity_name(r.id)) << "} & \\texttt{" << latex_escape(params_text(r.params))
             << "} & " << (r.pass ? "\\checkmark" : "fail") << " \\\\\n";
        break;
    }
  }
  if (cfg.format == Format::kLatex) text << "\\end{tabular}\n";
  if (cfg.format == Format::kPlain) text << reports.size() << " checks, " << failed << " failed\n";
  out.text = text.str();
  out.exit_code = failed == 0 ? 0 : 1;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Pieri coefficients and identity checks for Hall-Littlewood and Macdonald polynomials"};
  app.require_subcommand(1);
  Config cfg;
  const std::map<std::string, Format> formats{
      {"plain", Format::kPlain}, {"json", Format::kJson}, {"latex", Format::kLatex}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "plain, json or latex")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--output", cfg.output, "write to this file instead of stdout");
  };

  auto* coeff = app.add_subcommand("coeff", "Pieri coefficient of lambda over mu");
  coeff->add_option("--kind", cfg.kind_text, "vs, hs, sk, hat_sk or ks")->required();
  coeff->add_option("--lambda", cfg.lambda_text, "comma-separated parts, empty for the empty partition")->required();
  coeff->add_option("--mu", cfg.mu_text, "comma-separated parts")->required();
  coeff->add_flag("--q-zero", cfg.q_zero, "set q = 0");
  coeff->add_flag("--check", cfg.check, "compare with the product formula");
  common(coeff);

  auto* expand = app.add_subcommand("expand", "monomial expansion of P, Q, a skew Q or g_r");
  expand->add_option("--op", cfg.op_text, "P, Q, skew or g")->required();
  expand->add_option("--lambda", cfg.lambda_text, "comma-separated parts");
  expand->add_option("--mu", cfg.mu_text, "inner shape for skew");
  expand->add_option("--r", cfg.r, "degree for g");
  expand->add_option("--cap", cfg.cap, "degree cap (defaults to the degree)");
  expand->add_flag("--q-zero", cfg.q_zero, "set q = 0");
  common(expand);

  auto* verify = app.add_subcommand("verify", "run identity checks over all small parameters");
  verify->add_option("--suite", cfg.suite_text, "all, or comma-separated identity names");
  verify->add_option("--max-size", cfg.max_size, "largest partition size");
  verify->add_option("--cap", cfg.cap, "degree cap for truncated series (default $QTPIERI_CAP or 5)");
  verify->add_option("--max-r", cfg.max_r, "largest r in the Pieri rules and m in thm7");
  verify->add_option("--jobs", cfg.jobs, "worker threads (default: hardware concurrency)");
  common(verify);

  try {
    cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
    app.parse(argc, argv);
    if (verify->parsed() && cfg.cap < 0) cfg.cap = default_cap();

    Output out;
    if (coeff->parsed()) {
      out = cmd_coeff(cfg);
    } else if (expand->parsed()) {
      out = cmd_expand(cfg);
    } else {
      out = cmd_verify(cfg);
    }

    if (cfg.output.empty()) {
      std::cout << out.text;
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) throw Usage("cannot open " + cfg.output);
      file << out.text;
    }
    return out.exit_code;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Usage& e) {
    std::cerr << "qtpieri: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qtpieri: " << e.what() << '\n';
    return 2;
  }
}
