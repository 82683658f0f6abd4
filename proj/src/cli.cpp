#include "taftcross/cli.hpp"

#include "taftcross/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>

namespace taftcross {

const std::vector<std::string> kVerbs = {"build", "verify", "enumerate-pairs", "classify", "double", "aut", "iso"};

namespace {

struct Roots {
  int n, m;
  CycScalar qbar, q;
};

int require_n(const Command& c) {
  if (!c.n) throw UsageError("--n is required for " + c.verb);
  if (*c.n < 2) throw UsageError("--n: must be at least 2");
  return *c.n;
}

CycScalar primitive_root(int order, int k, const char* flag) {
  const int r = ((k % order) + order) % order;
  if (std::gcd(r, order) != 1)
    throw UsageError(std::string(flag) + ": zeta_" + std::to_string(order) + "^" + std::to_string(k) +
                     " is not a primitive root of unity");
  return root_of_unity(order, r);
}

// q is always zeta_m^q_exp; qbar is forced to q^(n-1) for the alpha family
Roots roots(const Command& c, bool alpha_family) {
  const int n = require_n(c);
  const int m = c.m.value_or(n);
  if (m < 2) throw UsageError("--m: must be at least 2");
  if (alpha_family && m != n) throw UsageError("--m: the alpha family needs m = n");
  const CycScalar q = primitive_root(m, c.q_exp, "--q-exp");
  if (alpha_family) {
    const CycScalar qbar = q.pow(n - 1);
    if (c.qbar_exp && primitive_root(n, *c.qbar_exp, "--qbar-exp") != qbar)
      throw UsageError("--qbar-exp: the alpha family needs qbar = q^(n-1)");
    return {n, m, qbar, q};
  }
  return {n, m, primitive_root(n, c.qbar_exp.value_or(1), "--qbar-exp"), q};
}

CycScalar alpha_value(int n, const std::optional<std::string>& text, const std::optional<int>& exp, const char* flag,
                      const char* exp_flag) {
  if (text && exp) throw UsageError(std::string(flag) + ": give either " + flag + " or " + exp_flag);
  if (exp) return root_of_unity(n, ((*exp % n) + n) % n);
  if (!text) return CycScalar(1);
  CycScalar a;
  try {
    a = CycScalar(parse_rational(*text));
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": '" + *text + "' is not a rational number");
  }
  if (a.is_zero()) throw UsageError(std::string(flag) + ": must be nonzero");
  return a;
}

PresentationParams params_for(const Command& c, const std::string& family, int sigma_index,
                              const std::optional<std::string>& alpha, const std::optional<int>& alpha_exp,
                              const char* alpha_flag, const char* alpha_exp_flag, const char* sigma_flag,
                              bool alpha_roots = false) {
  if (family != "sigma" && family != "alpha") throw UsageError("--family: expected sigma or alpha, got " + family);
  const bool is_alpha = family == "alpha";
  const Roots r = roots(c, is_alpha || alpha_roots);
  PresentationParams p;
  if (is_alpha) {
    p = PresentationParams::q_alpha(r.n, r.q, alpha_value(r.n, alpha, alpha_exp, alpha_flag, alpha_exp_flag));
  } else {
    const int d = std::gcd(r.n, r.m);
    if (sigma_index < 0 || sigma_index >= d)
      throw UsageError(std::string(sigma_flag) + ": must lie in [0, " + std::to_string(d) + ")");
    p = PresentationParams::t_sigma(r.n, r.m, r.qbar, r.q, root_of_unity(d, sigma_index));
  }
  if (c.corrupt_xx_exp) {
    const int L = std::lcm(r.n, r.m);
    p.xX_override = root_of_unity(L, ((*c.corrupt_xx_exp % L) + L) % L);
  }
  return p;
}

PresentationParams source_params(const Command& c, bool alpha_roots = false) {
  return params_for(c, c.family, c.sigma_index, c.alpha, c.alpha_exp, "--alpha", "--alpha-exp", "--sigma-index",
                    alpha_roots);
}

Json instance_json(const Roots& r) {
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["qbar"] = to_json(r.qbar);
  j["q"] = to_json(r.q);
  return j;
}

struct Outcome {
  Json doc;
  bool ok = true;
};

Outcome do_build(const Command& c) {
  return {to_json(presentation(source_params(c), c.jobs)), true};
}

Outcome do_verify(const Command& c) {
  const PresentationParams p = source_params(c);
  const HopfStructure pres = presentation(p, c.jobs);
  HopfCheckOptions opt;
  opt.jobs = c.jobs;
  AxiomReport rep = verify_hopf(pres, opt);
  rep.merge(verify_matched_pair(p.matched_pair(), c.jobs));
  rep.record_check("bicrossed-equals-presentation");
  if (!structures_equal(bicrossed_product(p.matched_pair(), c.jobs), pres))
    rep.record_failure({"bicrossed-equals-presentation", {}, "structure constants differ"});
  Json j;
  j["instance"] = to_json(p);
  j["dim"] = pres.dim;
  j["sampled_associativity"] = pres.dim > opt.exhaustive_triple_limit;
  const Json body = to_json(rep);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return {std::move(j), rep.pass()};
}

Outcome do_enumerate(const Command& c) {
  const Roots r = roots(c, false);
  Json pairs = Json::array();
  for (const auto& mp : enumerate_matched_pairs(r.n, r.m, r.qbar, r.q, default_alpha_samples(), c.jobs))
    pairs.push_back(to_json(mp));
  Json j;
  j["instance"] = instance_json(r);
  j["count"] = pairs.size();
  j["pairs"] = std::move(pairs);
  return {std::move(j), true};
}

Outcome do_classify(const Command& c) {
  const Roots r = roots(c, false);
  const ClassReport rep = classify(r.n, r.m, r.qbar, r.q, c.jobs);
  return {to_json(rep), rep.count == rep.formula_count};
}

Outcome do_double(const Command& c) {
  const int n = require_n(c);
  if (c.m && *c.m != n) throw UsageError("--m: the double is built from T_{n^2}, leave --m unset or equal to --n");
  const CycScalar q = primitive_root(n, c.q_exp, "--q-exp");
  const DrinfeldDouble dd = drinfeld_double(n, q, c.jobs);
  const Factorization minus = factorization(PresentationParams::q_alpha(n, q, CycScalar(-1)), c.jobs);
  const Factorization one = factorization(PresentationParams::q_alpha(n, q, CycScalar(1)), c.jobs);
  const bool transported = same_actions(transport(dd.pair, dd.theta), family_alpha(n, q, CycScalar(-1)));
  const LinearMap w = compose(q_normalization(minus, one), double_to_transported(dd, minus.structure));
  const AxiomReport morph = hopf_morphism_report(w, c.jobs);
  const bool bij = is_bijective(w);
  Json inst;
  inst["n"] = n;
  inst["q"] = to_json(q);
  Json j;
  j["instance"] = std::move(inst);
  j["double"] = to_json(*dd.structure);
  j["target"] = to_json(one.params);
  j["transport_is_alpha_minus_one"] = transported;
  j["witness"] = to_json(w);
  j["witness_morphism"] = to_json(morph);
  j["witness_bijective"] = bij;
  return {std::move(j), transported && morph.pass() && bij};
}

Outcome do_aut(const Command& c) {
  const AutomorphismReport rep = automorphisms(source_params(c), c.jobs);
  return {to_json(rep), rep.pass()};
}

Outcome do_iso(const Command& c) {
  // both sides share the Taft factors, so an alpha side fixes qbar = q^(n-1) for both
  const bool alpha_roots = c.family == "alpha" || c.to_family == "alpha";
  const PresentationParams src = source_params(c, alpha_roots);
  const PresentationParams tgt = params_for(c, c.to_family, c.to_sigma_index, c.to_alpha, c.to_alpha_exp, "--to-alpha",
                                            "--to-alpha-exp", "--to-sigma-index", alpha_roots);
  const IsoResult res = iso_search(factorization(src, c.jobs), factorization(tgt, c.jobs), c.jobs);
  Json j;
  j["source"] = to_json(src);
  j["target"] = to_json(tgt);
  const Json body = to_json(res);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return {std::move(j), true};
}

Outcome dispatch(const Command& c) {
  if (c.verb == "build") return do_build(c);
  if (c.verb == "verify") return do_verify(c);
  if (c.verb == "enumerate-pairs") return do_enumerate(c);
  if (c.verb == "classify") return do_classify(c);
  if (c.verb == "double") return do_double(c);
  if (c.verb == "aut") return do_aut(c);
  if (c.verb == "iso") return do_iso(c);
  throw UsageError("unknown verb '" + c.verb + "'");
}

}  // namespace

std::optional<Command> parse_command(int argc, const char* const* argv, std::ostream& out) {
  Command c;
  CLI::App app{"Hopf algebras factoring through two Taft algebras"};
  app.add_option("verb", c.verb, "build | verify | enumerate-pairs | classify | double | aut | iso")
      ->required()
      ->check(CLI::IsMember(kVerbs));
  app.add_option("--n", c.n, "order of qbar (first Taft factor)");
  app.add_option("--m", c.m, "order of q (second Taft factor), defaults to n");
  app.add_option("--q-exp", c.q_exp, "q = zeta_m^k");
  app.add_option("--qbar-exp", c.qbar_exp, "qbar = zeta_n^k");
  app.add_option("--sigma-index", c.sigma_index, "sigma = zeta_d^k, d = gcd(n, m)");
  app.add_option("--alpha", c.alpha, "alpha as a rational, e.g. -1/2");
  app.add_option("--alpha-exp", c.alpha_exp, "alpha = zeta_n^k");
  app.add_option("--family", c.family, "sigma | alpha");
  app.add_option("--to-family", c.to_family, "iso target family");
  app.add_option("--to-sigma-index", c.to_sigma_index, "iso target sigma");
  app.add_option("--to-alpha", c.to_alpha, "iso target alpha");
  app.add_option("--to-alpha-exp", c.to_alpha_exp, "iso target alpha = zeta_n^k");
  app.add_option("--corrupt-xX-exp", c.corrupt_xx_exp, "replace the xX coefficient by zeta_L^k");
  app.add_option("--out", c.out, "output path, standard output when omitted");
  app.add_option("--jobs", c.jobs, "worker threads, 0 = hardware");
  app.add_flag("-v,--verbose", c.verbose, "timing on standard error");
  app.add_flag("--pretty", c.pretty, "indented JSON");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  return c;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = dispatch(cmd);
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "verification failed: " << e.what() << "\n";
    return 2;
  }
  const std::string text = o.doc.dump(cmd.pretty ? 1 : -1) + "\n";
  if (cmd.out.empty()) {
    out << text;
  } else {
    std::ofstream f(cmd.out, std::ios::binary);
    if (!f) {
      err << "usage: --out: cannot open " << cmd.out << "\n";
      return 1;
    }
    f << text;
  }
  if (cmd.verbose) {
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    err << cmd.verb << ": " << ms << " ms, " << (o.ok ? "pass" : "FAIL") << "\n";
  }
  return o.ok ? 0 : 2;
}

int cli_main(int argc, const char* const* argv) {
  try {
    const std::optional<Command> c = parse_command(argc, argv, std::cout);
    if (!c) return 0;
    return run(*c, std::cout, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace taftcross
