// Copyright 2026 The HeisenLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "acceptance.h"
#include "heisenlab/automorphisms.h"
#include "heisenlab/central_ext.h"
#include "heisenlab/decompose.h"
#include "heisenlab/error.h"
#include "heisenlab/field_hom.h"
#include "heisenlab/fologic.h"
#include "heisenlab/interp.h"
#include "heisenlab/json_io.h"
#include "heisenlab/psi_extend.h"

namespace heisenlab::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// What a command produced: the JSON result and its text rendering.
struct Output {
  Json parameters = Json::object();
  Json result = Json::object();
  std::vector<std::string> lines;
  std::vector<std::string> timing;  // text mode only
  int exit_code = 0;
};

double Now() {
  using Clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(Clock::now().time_since_epoch()).count();
}

std::string Seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json ReadJson(const std::string& path) {
  const std::string text = ReadFile(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
}

// Splits on commas outside brackets.
std::vector<std::string> SplitTop(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

Code FiniteLiteral(const Field& f, const std::string& text) {
  return ParseFieldLiteral(f, text).code();
}

FnTable LiteralList(const Field& f, const std::string& text) {
  FnTable out;
  for (const std::string& part : SplitTop(text)) out.push_back(FiniteLiteral(f, part));
  return out;
}

// F_p-linear map from the images of the basis 1, t, ..., t^{n-1}.
FnTable LinearFromBasisImages(const Field& f, const FnTable& images) {
  if (images.size() != static_cast<std::size_t>(f.degree())) {
    throw UsageError("expected " + std::to_string(f.degree()) + " basis images");
  }
  FnTable out(f.order(), 0);
  for (Code x = 0; x < f.order(); ++x) {
    Code acc = 0;
    for (int j = 0; j < f.degree(); ++j) {
      acc = f.add(acc, f.mul(f.from_int(f.coeff(x, j)), images[j]));
    }
    out[x] = acc;
  }
  return out;
}

void RequireFinite(const Field& f) {
  if (!f.is_finite()) {
    throw Error(ErrorCode::kInfiniteField, "this command needs a finite field");
  }
}

FieldHom ThetaByName(const std::string& name, const Field& k, const Field& m) {
  if (name == "identity" || name == "id") {
    if (!(k == m)) throw UsageError("identity needs equal source and target");
    return FieldHom::Identity(k);
  }
  if (name == "frobenius") {
    if (!(k == m)) throw UsageError("frobenius needs equal source and target");
    return Frobenius(k);
  }
  if (name == "canonical") {
    if (k == m) return FieldHom::Identity(k);
    return CanonicalEmbedding(k, m);
  }
  throw UsageError("unknown --theta " + name);
}

// ---------------------------------------------------------------- commands

Output FieldInfo(const std::string& spec) {
  Output o;
  const Field f = ParseFieldSpec(spec);
  o.parameters["field"] = spec;
  o.result["field"] = FieldToJson(f);
  o.result["name"] = f.name();
  o.lines.push_back("field " + f.name());
  o.lines.push_back("characteristic " + std::to_string(f.characteristic()));
  if (!f.is_finite()) {
    o.result["order"] = "infinite";
    o.lines.push_back("order infinite");
    return o;
  }
  o.result["order"] = f.order();
  o.result["degree"] = f.degree();
  o.result["primitive_element"] = ElementToJson(f, f.primitive_element());
  o.result["frobenius"] = FieldMapToJson(f, Frobenius(f).table());
  o.lines.push_back("degree " + std::to_string(f.degree()));
  o.lines.push_back("order " + std::to_string(f.order()));
  o.lines.push_back("primitive element " + f.format(f.primitive_element()));
  if (f.order() <= 64) {
    std::string elems;
    for (Code x = 0; x < f.order(); ++x) elems += (x ? " " : "") + f.format(x);
    o.lines.push_back("elements " + elems);
  }
  return o;
}

Output GroupCheck(const std::string& spec, std::uint64_t seed) {
  Output o;
  const Field f = ParseFieldSpec(spec);
  o.parameters["field"] = spec;
  o.parameters["seed"] = seed;
  const HGroup g(f);
  Rng rng(seed);
  Json checks = Json::object();
  bool all = true;
  auto report = [&](const std::string& name, std::uint64_t passed, std::uint64_t total,
                    bool exhaustive) {
    checks[name] = {{"passed", passed}, {"total", total}, {"exhaustive", exhaustive}};
    all = all && passed == total;
    o.lines.push_back(std::string(passed == total ? "PASS " : "FAIL ") + name + " " +
                      std::to_string(passed) + "/" + std::to_string(total) +
                      (exhaustive ? "" : " (sampled)"));
  };
  if (!f.is_finite()) {
    // Sampled over small fractions.
    auto rand_q = [&] {
      const std::int64_t num = static_cast<std::int64_t>(RandomBelow(rng, 41)) - 20;
      const std::int64_t den = static_cast<std::int64_t>(RandomBelow(rng, 20)) + 1;
      return f.fraction(num, den);
    };
    auto rand_g = [&] { return g.make(rand_q(), rand_q(), rand_q()); };
    const int n = 2000;
    std::uint64_t assoc = 0, inv = 0, comm = 0, torsion = 0;
    for (int i = 0; i < n; ++i) {
      const HElement x = rand_g(), y = rand_g(), z = rand_g();
      assoc += g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z));
      inv += g.mul(x, g.inv(x)) == g.identity() && g.mul(g.inv(x), x) == g.identity();
      comm += g.comm(x, y) == g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
      HElement pow = x;
      bool nontrivial = true;
      if (x == g.identity()) {
        torsion += 1;
        continue;
      }
      for (int e = 2; e <= 12; ++e) {
        pow = g.mul(pow, x);
        nontrivial = nontrivial && !(pow == g.identity());
      }
      torsion += nontrivial;
    }
    report("associativity", assoc, n, false);
    report("inverse", inv, n, false);
    report("commutator", comm, n, false);
    report("torsion-free", torsion, n, false);
  } else {
    const Code n = static_cast<Code>(g.order());
    if (!g.codable() || n > kMaxEnumeratedGroup) {
      throw Error(ErrorCode::kTooLarge, "group-check works up to 2^16 elements");
    }
    const bool pairs_exhaustive = std::uint64_t{n} * n <= (1u << 24);
    const bool triples_exhaustive = std::uint64_t{n} * n * n <= (1u << 24);
    auto sample = [&] { return static_cast<Code>(RandomBelow(rng, n)); };
    std::uint64_t assoc = 0, total3 = 0;
    if (triples_exhaustive) {
      for (Code x = 0; x < n; ++x)
        for (Code y = 0; y < n; ++y)
          for (Code z = 0; z < n; ++z, ++total3)
            assoc += g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z));
    } else {
      for (; total3 < 10000; ++total3) {
        const Code x = sample(), y = sample(), z = sample();
        assoc += g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z));
      }
    }
    report("associativity", assoc, total3, triples_exhaustive);
    std::uint64_t inv = 0;
    for (Code x = 0; x < n; ++x) {
      inv += g.mul(x, g.inv(x)) == 0 && g.mul(g.inv(x), x) == 0;
    }
    report("inverse", inv, n, true);
    std::uint64_t comm = 0, total2 = 0;
    auto comm_ok = [&](Code x, Code y) {
      return g.comm(x, y) == g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
    };
    if (pairs_exhaustive) {
      for (Code x = 0; x < n; ++x)
        for (Code y = 0; y < n; ++y, ++total2) comm += comm_ok(x, y);
    } else {
      for (; total2 < 10000; ++total2) comm += comm_ok(sample(), sample());
    }
    report("commutator", comm, total2, pairs_exhaustive);
    if (pairs_exhaustive) {
      // Center by search, and the set of commutator values.
      std::vector<bool> is_commutator(n, false);
      std::uint64_t center_size = 0, matches = 0;
      for (Code x = 0; x < n; ++x) {
        bool central = true;
        for (Code y = 0; y < n; ++y) {
          is_commutator[g.comm(x, y)] = true;
          central = central && g.mul(x, y) == g.mul(y, x);
        }
        center_size += central;
        matches += central == g.is_central(x);
      }
      std::uint64_t comm_values = 0, comm_match = 0;
      for (Code x = 0; x < n; ++x) {
        comm_values += is_commutator[x];
        comm_match += is_commutator[x] == g.is_central(x);
      }
      report("center", matches, n, true);
      report("commutator set = center", comm_match, n, true);
      o.result["center_size"] = center_size;
      o.result["commutator_values"] = comm_values;
    }
    std::uint64_t exponent_ok = 0;
    const std::uint64_t p = f.characteristic();
    const std::uint64_t exponent = p == 2 ? 4 : p;
    for (Code x = 0; x < n; ++x) {
      Code acc = 0;
      for (std::uint64_t e = 0; e < exponent; ++e) acc = g.mul(acc, x);
      exponent_ok += acc == 0;
    }
    report("exponent divides " + std::to_string(exponent), exponent_ok, n, true);
    if (f.is_prime()) {
      std::vector<bool> seen(n, false);
      std::vector<Code> stack{0};
      seen[0] = true;
      std::uint64_t reached = 1;
      while (!stack.empty()) {
        const Code x = stack.back();
        stack.pop_back();
        for (Code s : {g.u_code(), g.v_code()}) {
          const Code y = g.mul(x, s);
          if (!seen[y]) {
            seen[y] = true;
            ++reached;
            stack.push_back(y);
          }
        }
      }
      report("generated by u, v", reached, n, true);
    }
    o.result["order"] = g.order();
  }
  o.result["checks"] = checks;
  o.result["pass"] = all;
  o.exit_code = all ? 0 : 1;
  return o;
}

Output ExtBuild(const std::string& cocycle_file, const std::string& spec,
                const std::string& preset) {
  Output o;
  Cocycle c = [&] {
    if (!cocycle_file.empty()) {
      o.parameters["cocycle"] = cocycle_file;
      return CocycleFromJson(ReadJson(cocycle_file));
    }
    if (spec.empty()) throw UsageError("give --cocycle FILE or --field SPEC");
    o.parameters["field"] = spec;
    o.parameters["preset"] = preset;
    const Field f = ParseFieldSpec(spec);
    RequireFinite(f);
    if (preset == "heisenberg") return Cocycle::Heisenberg(f);
    if (preset == "zero") return Cocycle::Zero(AbGroup(f, 2), AbGroup(f, 1));
    if (preset == "product") {
      return Cocycle::FromFunction(AbGroup(f, 1), AbGroup(f, 1),
                                   [&f](Code x, Code y) { return f.mul(x, y); });
    }
    throw UsageError("unknown --preset " + preset);
  }();
  const ExtGroup e = ExtGroup::Build(c);
  const Code n = static_cast<Code>(e.order());
  std::uint64_t b_central = 0, commuting_pairs = 0;
  for (Code b = 0; b < e.b_group().order(); ++b) {
    const Code g = e.make(0, b);
    bool central = true;
    for (Code h = 0; h < n; ++h) central = central && e.mul(g, h) == e.mul(h, g);
    b_central += central;
  }
  for (Code g = 0; g < n; ++g)
    for (Code h = 0; h < n; ++h) commuting_pairs += e.mul(g, h) == e.mul(h, g);
  const bool abelian = commuting_pairs == std::uint64_t{n} * n;
  o.result["order"] = e.order();
  o.result["abelian"] = abelian;
  o.result["b_central"] = b_central == e.b_group().order();
  o.result["commuting_pairs"] = commuting_pairs;
  o.lines.push_back("order " + std::to_string(e.order()));
  o.lines.push_back(std::string("abelian ") + (abelian ? "yes" : "no"));
  o.lines.push_back(std::string("B central ") +
                    (b_central == e.b_group().order() ? "yes" : "no"));
  o.lines.push_back("commuting pairs " + std::to_string(commuting_pairs));
  return o;
}

Output AutCount(const std::string& spec, const std::string& method) {
  Output o;
  const Field f = ParseFieldSpec(spec);
  o.parameters["field"] = spec;
  o.parameters["method"] = method;
  const HGroup g(f);
  std::vector<FnTable> tables;
  if (method == "parametrized") {
    tables = AutEnumerateParametrized(g);
  } else if (method == "bruteforce") {
    tables = AutEnumerateBruteforce(g);
  } else if (method == "basis") {
    tables = AutEnumerateOverBasis(g);
  } else {
    throw UsageError("unknown --method " + method);
  }
  o.result["count"] = tables.size();
  o.lines.push_back(std::to_string(tables.size()));
  return o;
}

Output AutDump(const std::string& spec, int count, std::uint64_t seed) {
  Output o;
  const Field f = ParseFieldSpec(spec);
  RequireFinite(f);
  o.parameters["field"] = spec;
  o.parameters["count"] = count;
  o.parameters["seed"] = seed;
  const HGroup g(f);
  Rng rng(seed);
  Json list = Json::array();
  for (int i = 0; i < count; ++i) {
    const AutParams p = RandomAutParams(f, rng);
    if (g.codable() && g.order() <= kMaxEnumeratedGroup) {
      AutMake(g, p);
    } else {
      ValidateAutParams(f, p);
    }
    Json j = AutParamsToJson(f, p);
    o.lines.push_back(j.dump());
    list.push_back(std::move(j));
  }
  o.result["params"] = std::move(list);
  return o;
}

Output CentralAut(const std::string& spec, const std::string& lambda_text,
                  const std::string& mu_text) {
  Output o;
  const Field f = ParseFieldSpec(spec);
  RequireFinite(f);
  o.parameters["field"] = spec;
  const HGroup g(f);
  FnTable lambda_images(f.degree(), 0), mu_images(f.degree(), 0);
  if (lambda_text.empty()) {
    if (f.degree() >= 2) lambda_images[1] = 1;  // a0 + a1 t + ... -> a1
  } else {
    lambda_images = LiteralList(f, lambda_text);
  }
  if (!mu_text.empty()) mu_images = LiteralList(f, mu_text);
  o.parameters["lambda"] = FieldMapToJson(f, lambda_images);
  o.parameters["mu"] = FieldMapToJson(f, mu_images);
  CentralAutParams params{LinearFromBasisImages(f, lambda_images),
                          LinearFromBasisImages(f, mu_images)};
  const FnTable phi = CentralAutMake(g, params);
  std::uint64_t moved = 0;
  for (Code x = 0; x < phi.size(); ++x) moved += phi[x] != x;
  // Fixed points on H(F_p) sitting inside H(K).
  const Code p = static_cast<Code>(f.characteristic());
  std::uint64_t fixed_prime = 0;
  for (Code a = 0; a < p; ++a)
    for (Code b = 0; b < p; ++b)
      for (Code c = 0; c < p; ++c) {
        const Code x = g.make_code(a, b, c);
        fixed_prime += phi[x] == x;
      }
  const bool verified = IsAutomorphism(g, phi);
  o.result["moved"] = moved;
  o.result["identity"] = moved == 0;
  o.result["fixed_prime_subgroup"] = fixed_prime;
  o.result["prime_subgroup_order"] = std::uint64_t{p} * p * p;
  o.result["automorphism"] = verified;
  o.lines.push_back("moved " + std::to_string(moved) + "/" + std::to_string(g.order()));
  o.lines.push_back("fixed in H(F" + std::to_string(p) + ") " + std::to_string(fixed_prime) +
                    "/" + std::to_string(std::uint64_t{p} * p * p));
  o.lines.push_back(std::string("automorphism ") + (verified ? "yes" : "no"));
  return o;
}

Output PsiSolve(const std::string& spec, const std::string& e_text, bool list) {
  Output o;
  const Field f = ParseFieldSpec(spec);
  RequireFinite(f);
  const Code e = FiniteLiteral(f, e_text);
  o.parameters["field"] = spec;
  o.parameters["e"] = ElementToJson(f, e);
  const std::vector<FnTable> sols = SolveQuadraticAdditive(f, e);
  o.result["count"] = sols.size();
  o.lines.push_back(std::to_string(sols.size()) + " solutions");
  if (list) {
    Json arr = Json::array();
    for (const FnTable& s : sols) {
      arr.push_back(FieldMapToJson(f, s));
      std::string line;
      for (Code x = 0; x < s.size(); ++x) line += (x ? " " : "") + f.format(s[x]);
      o.lines.push_back(line);
    }
    o.result["solutions"] = std::move(arr);
  }
  return o;
}

Output PsiExtendCmd(const std::string& sub_spec, const std::string& spec,
                    const std::string& c_text, const std::string& psi_text) {
  Output o;
  const Field k = ParseFieldSpec(sub_spec);
  const Field m = ParseFieldSpec(spec);
  RequireFinite(m);
  const FieldHom theta = k == m ? FieldHom::Identity(m) : CanonicalEmbedding(k, m);
  const Code c = FiniteLiteral(m, c_text);
  o.parameters = {{"sub", sub_spec}, {"field", spec}, {"c", ElementToJson(m, c)}};
  FnTable values(k.order(), 0);
  if (!psi_text.empty()) {
    values = LiteralList(m, psi_text);
    o.parameters["psi"] = FieldMapToJson(m, values);
  } else if (m.characteristic() != 2) {
    const Code half = m.div(c, m.from_int(2));
    for (Code x = 0; x < k.order(); ++x) values[x] = m.mul(half, m.mul(theta(x), theta(x)));
  }
  const std::vector<Code> comp = ComplementBasis(theta);
  const QuadAdditiveMap big = ExtendPsi(QuadAdditiveMap{theta, c, values}, comp);
  std::uint64_t ok = 0;
  for (Code x = 0; x < m.order(); ++x)
    for (Code y = 0; y < m.order(); ++y)
      ok += big.values[m.add(x, y)] ==
            m.add(m.add(big.values[x], big.values[y]), m.mul(c, m.mul(x, y)));
  Json cj = Json::array();
  for (Code v : comp) cj.push_back(ElementToJson(m, v));
  o.result["complement"] = cj;
  o.result["psi"] = FieldMapToJson(m, big.values);
  o.result["identity_pairs"] = ok;
  o.result["pairs"] = m.order() * m.order();
  std::string line;
  for (Code x = 0; x < m.order(); ++x) line += (x ? " " : "") + m.format(big.values[x]);
  o.lines.push_back("Psi " + line);
  o.lines.push_back("identity holds on " + std::to_string(ok) + "/" +
                    std::to_string(m.order() * m.order()) + " pairs");
  return o;
}

Output DecomposeCmd(const std::string& src_spec, const std::string& tgt_spec,
                    const std::string& hom_file) {
  Output o;
  const HGroup src(ParseFieldSpec(src_spec));
  const HGroup tgt(ParseFieldSpec(tgt_spec));
  o.parameters = {{"source", src_spec}, {"target", tgt_spec}, {"hom", hom_file}};
  Json j = ReadJson(hom_file);
  if (j.is_object() && j.contains("result")) j = j["result"];  // a `compose --json` report
  RequireFinite(src.field());
  RequireFinite(tgt.field());
  FnTable table = HomTableFromJson(src, tgt, j);
  const GroupHomTable f = GroupHomTable::Make(src, tgt, std::move(table));
  const Decomposition d = Decompose(f);
  o.result = DecompositionToJson(d);
  o.lines.push_back(o.result.dump(2));
  return o;
}

Output ComposeCmd(const std::string& src_spec, const std::string& tgt_spec,
                  const std::string& theta_name, const std::string& params_file,
                  std::uint64_t seed) {
  Output o;
  const Field k = ParseFieldSpec(src_spec), m = ParseFieldSpec(tgt_spec);
  RequireFinite(k);
  RequireFinite(m);
  o.parameters = {{"source", src_spec}, {"target", tgt_spec}, {"theta", theta_name}};
  const FieldHom theta = ThetaByName(theta_name, k, m);
  AutParams params;
  if (!params_file.empty()) {
    o.parameters["params"] = params_file;
    params = AutParamsFromJson(m, ReadJson(params_file));
  } else {
    o.parameters["seed"] = seed;
    Rng rng(seed);
    params = RandomAutParams(m, rng);
  }
  const GroupHomTable f = Compose(params, theta);
  o.result = HomToJson(f);
  o.result["params"] = AutParamsToJson(m, params);
  o.lines.push_back(o.result.dump(2));
  return o;
}

Output Interpret(const std::string& spec, bool check, bool emit, bool exhaustive) {
  Output o;
  const Field f = ParseFieldSpec(spec);
  o.parameters = {{"field", spec}, {"check", check}, {"emit_tables", emit},
                  {"exhaustive", exhaustive}};
  const InterpContext ctx = InterpContext::Make(HGroup(f));
  if (!check && !emit) check = true;
  if (check) {
    const double start = Now();
    const InterpCheck r = CheckInterpretation(
        ctx, exhaustive ? WitnessSearch::kExhaustive : WitnessSearch::kFiltered);
    const double secs = Now() - start;
    const bool pass = r.passed == r.total;
    o.result["passed"] = r.passed;
    o.result["total"] = r.total;
    o.result["pass"] = pass;
    if (r.first_failure) o.result["first_failure"] = *r.first_failure;
    o.lines.push_back(std::string(pass ? "PASS " : "FAIL ") + std::to_string(r.passed) + "/" +
                      std::to_string(r.total) + " triples");
    o.timing.push_back("time " + Seconds(secs) + " s");
    if (!pass) o.exit_code = 1;
  }
  if (emit) {
    const ReconstructedField rf = ReconstructField(ctx);
    o.result["add"] = rf.add;
    o.result["mul"] = rf.mul;
    o.lines.push_back(Json({{"add", rf.add}, {"mul", rf.mul}}).dump());
  }
  return o;
}

std::uint64_t BudgetFromEnv() {
  const char* env = std::getenv("HEISENLAB_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') throw UsageError("HEISENLAB_BUDGET must be an integer");
  return v;
}

Output EvalCmd(const std::string& spec, const std::string& formula_file,
               const std::string& formula_text, const std::string& assign) {
  Output o;
  if (formula_file.empty() == formula_text.empty()) {
    throw UsageError("give exactly one of --formula FILE or --text FORMULA");
  }
  const std::string text = formula_file.empty() ? formula_text : ReadFile(formula_file);
  const HGroup g(ParseFieldSpec(spec));
  o.parameters = {{"field", spec}, {"assign", assign}};
  if (!formula_file.empty()) o.parameters["formula"] = formula_file;
  const Formula phi = ParseFormula(text);
  o.parameters["parsed"] = Print(phi);
  const Assignment asg = ParseAssignment(g, assign);
  const bool value = Evaluate(g, asg, phi, BudgetFromEnv());
  o.result["value"] = value;
  o.lines.push_back(value ? "true" : "false");
  o.exit_code = value ? 0 : 1;
  return o;
}

Output SelfTest(std::uint64_t seed, int criterion) {
  Output o;
  std::vector<acceptance::CriterionResult> results;
  if (criterion == 0) {
    results = acceptance::RunAll(seed);
  } else {
    results.push_back(acceptance::RunCriterion(criterion, seed));
  }
  const Json report = acceptance::ReportJson(results, seed);
  o.parameters = report["parameters"];
  o.result = {{"criteria", report["criteria"]}, {"passed", report["passed"]},
              {"total", report["total"]}};
  bool ok = true;
  for (const auto& r : results) {
    o.lines.push_back(acceptance::FormatLine(r));
    ok = ok && r.pass && r.within_limit();
  }
  o.lines.push_back(std::string(ok ? "selftest passed " : "selftest FAILED ") +
                    std::to_string(report["passed"].get<int>()) + "/" +
                    std::to_string(results.size()));
  o.exit_code = ok ? 0 : 1;
  return o;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Heisenberg groups H(K).", "heisenlab"};
  app.require_subcommand(1);
  bool json = false;
  std::uint64_t seed = 0;
  app.add_flag("--json", json, "Emit a JSON report");
  app.add_option("--seed", seed, "Seed for randomized steps")->default_val(0);
  app.fallthrough();

  std::string field, source, target, file, text, method = "parametrized", preset = "heisenberg";
  std::string lambda, mu, e_text = "0", c_text = "0", psi, sub, theta_name = "canonical";
  std::string assign;
  int count = 1, criterion = 0;
  bool check = false, emit = false, exhaustive = false, list = false;

  std::function<Output()> action;
  std::string command;
  auto sub_cmd = [&](const char* name, const char* help, std::function<Output()> fn) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&command, &action, name, fn] {
      command = name;
      action = fn;
    });
    return s;
  };

  auto* fi = sub_cmd("field-info", "Describe a field", [&] { return FieldInfo(field); });
  fi->add_option("--field", field, "F5, F9:t^2+1, Q, ...")->required();

  auto* gc = sub_cmd("group-check", "Check the group law of H(K)",
                     [&] { return GroupCheck(field, seed); });
  gc->add_option("--field", field)->required();

  auto* eb = sub_cmd("ext-build", "Build a central extension from a cocycle",
                     [&] { return ExtBuild(file, field, preset); });
  eb->add_option("--cocycle", file, "Cocycle JSON file");
  eb->add_option("--field", field);
  eb->add_option("--preset", preset, "heisenberg | zero | product")->default_val("heisenberg");

  auto* ac = sub_cmd("aut-count", "Count automorphisms of H(K)",
                     [&] { return AutCount(field, method); });
  ac->add_option("--field", field)->required();
  ac->add_option("--method", method, "parametrized | bruteforce | basis")
      ->default_val("parametrized");

  auto* ad = sub_cmd("aut-dump", "Random automorphism parameters as JSON",
                     [&] { return AutDump(field, count, seed); });
  ad->add_option("--field", field)->required();
  ad->add_option("--count", count)->default_val(1)->check(CLI::PositiveNumber);

  auto* ca = sub_cmd("central-aut", "Build a central automorphism",
                     [&] { return CentralAut(field, lambda, mu); });
  ca->add_option("--field", field)->required();
  ca->add_option("--lambda", lambda, "Images of the basis 1, t, ... (comma separated)");
  ca->add_option("--mu", mu, "Images of the basis 1, t, ... (comma separated)");

  auto* ps = sub_cmd("psi-solve", "Solve psi(x+y) = psi(x) + psi(y) + e xy",
                     [&] { return PsiSolve(field, e_text, list); });
  ps->add_option("--field", field)->required();
  ps->add_option("--e", e_text)->default_val("0");
  ps->add_flag("--list", list, "Print every solution");

  auto* pe = sub_cmd("psi-extend", "Extend psi from a subfield",
                     [&] { return PsiExtendCmd(sub, field, c_text, psi); });
  pe->add_option("--sub", sub, "Subfield (prime field or the field itself)")->required();
  pe->add_option("--field", field)->required();
  pe->add_option("--c", c_text)->default_val("0");
  pe->add_option("--psi", psi, "Values on the subfield in its enumeration order");

  auto* de = sub_cmd("decompose", "Write a monomorphism as Phi o H(theta)",
                     [&] { return DecomposeCmd(source, target, file); });
  de->add_option("--source", source)->required();
  de->add_option("--target", target)->required();
  de->add_option("--hom", file, "Hom JSON file")->required();

  auto* co = sub_cmd("compose", "Tabulate Phi o H(theta)",
                     [&] { return ComposeCmd(source, target, theta_name, file, seed); });
  co->add_option("--source", source)->required();
  co->add_option("--target", target)->required();
  co->add_option("--theta", theta_name, "identity | canonical | frobenius")
      ->default_val("canonical");
  co->add_option("--params", file, "AutParams JSON file (random from --seed otherwise)");

  auto* in = sub_cmd("interpret", "Check the field interpretation in H(K)",
                     [&] { return Interpret(field, check, emit, exhaustive); });
  in->add_option("--field", field)->required();
  in->add_flag("--check", check);
  in->add_flag("--emit-tables", emit);
  in->add_flag("--exhaustive", exhaustive, "Search all witness pairs");

  auto* ev = sub_cmd("eval", "Evaluate a first-order formula in H(K)",
                     [&] { return EvalCmd(field, file, text, assign); });
  ev->add_option("--field", field)->required();
  ev->add_option("--formula", file, "Formula file");
  ev->add_option("--text", text, "Formula text");
  ev->add_option("--assign", assign, "X=(0,0,1),Y=(0,0,[1,2])");

  auto* st = sub_cmd("selftest", "Run the acceptance suite",
                     [&] { return SelfTest(seed, criterion); });
  st->add_option("--criterion", criterion, "Run only this criterion (1-9)")
      ->check(CLI::Range(1, acceptance::kCriteria));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  const bool is_eval = command == "eval";
  try {
    Output o = action();
    if (json) {
      Json report = {{"command", command}, {"parameters", o.parameters}, {"result", o.result}};
      out << report.dump(2) << "\n";
    } else {
      for (const std::string& line : o.lines) out << line << "\n";
      for (const std::string& line : o.timing) out << line << "\n";
    }
    return o.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return is_eval ? 2 : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (!e.witness().empty()) {
      err << "witness:";
      for (std::uint32_t w : e.witness()) err << " " << w;
      err << "\n";
    }
    if (json) {
      Json report = {{"command", command},
                     {"error", {{"name", std::string(e.name())},
                                {"message", e.what()},
                                {"witness", e.witness()}}}};
      out << report.dump(2) << "\n";
    }
    return is_eval ? 2 : kExitDomain;
  }
}

}  // namespace heisenlab::cli
