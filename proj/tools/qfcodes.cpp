// Command-line front end: builds defining-set codes from quadratic forms,
// computes weight hierarchies three independent ways, cross-checks them over
// a whole parameter matrix, and runs the isotropic/self-dual constructions.
// All numeric output is byte-deterministic for fixed flags.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qfc/code.hpp"
#include "qfc/field.hpp"
#include "qfc/formulas.hpp"
#include "qfc/quadform.hpp"
#include "qfc/search.hpp"
#include "qfc/subspace.hpp"

using nlohmann::ordered_json;
using namespace qfc;

namespace {

constexpr std::int64_t kGuardrailOrder = 729;  // 3^6

std::vector<Scalar> parse_scalar_list(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in list: " + text);
    out.push_back(std::stoll(item));
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

QuadraticForm parse_form(const FieldSpec& spec, const std::string& desc) {
  const int m = spec.m();
  if (desc == "identity") return QuadraticForm::identity(spec);
  if (desc.rfind("diag:", 0) == 0) {
    auto entries = parse_scalar_list(desc.substr(5));
    if (static_cast<int>(entries.size()) != m) {
      throw std::invalid_argument("diag form needs exactly m entries");
    }
    return QuadraticForm::from_diagonal(spec, entries);
  }
  if (desc.rfind("gram:", 0) == 0) {
    std::string body = desc.substr(5);
    std::vector<std::vector<Scalar>> rows;
    if (body.find(';') != std::string::npos) {
      std::stringstream ss(body);
      std::string row;
      while (std::getline(ss, row, ';')) rows.push_back(parse_scalar_list(row));
    } else {
      auto flat = parse_scalar_list(body);
      if (static_cast<int>(flat.size()) != m * m) {
        throw std::invalid_argument("gram form needs m*m entries");
      }
      for (int i = 0; i < m; ++i) {
        rows.emplace_back(flat.begin() + i * m, flat.begin() + (i + 1) * m);
      }
    }
    return QuadraticForm::from_gram(spec, rows);
  }
  if (desc.rfind("trace:", 0) == 0) {
    std::int64_t enc = std::stoll(desc.substr(6));
    if (enc < 0 || enc >= spec.order()) {
      throw std::invalid_argument("trace form scale encoding out of range");
    }
    return QuadraticForm::from_trace_scale(spec, spec.element(enc));
  }
  throw std::invalid_argument("unknown form descriptor: " + desc +
                              " (expected identity | diag:... | gram:... | trace:...)");
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

[[nodiscard]] int emit_error_json(const std::string& kind, const std::string& message,
                                  const ordered_json& extra = ordered_json::object()) {
  ordered_json err;
  err["error"] = ordered_json::object();
  err["error"]["kind"] = kind;
  err["error"]["message"] = message;
  for (auto it = extra.begin(); it != extra.end(); ++it) err["error"][it.key()] = it.value();
  std::cout << err.dump(2) << "\n";
  std::cerr << "error: " << message << "\n";
  return 1;
}

struct HierarchyArgs {
  Scalar p = 3;
  int m = 3;
  std::string form = "identity";
  Scalar a = 0;
  std::string method = "all";
  std::string modulus;
  int jobs = 1;
  std::string out = "json";
  bool timings = false;
};

int run_hierarchy(const HierarchyArgs& args) {
  FieldSpec spec = args.modulus.empty()
                       ? FieldSpec(args.p, args.m)
                       : FieldSpec(args.p, args.m, parse_scalar_list(args.modulus));
  QuadraticForm form = parse_form(spec, args.form);

  std::vector<std::string> methods;
  if (args.method == "all") {
    methods = {"wei", "lemma1"};
    if (args.m >= 3) methods.push_back("formula");
  } else if (args.method == "wei" || args.method == "lemma1" ||
             args.method == "formula") {
    methods = {args.method};
  } else {
    throw std::invalid_argument("unknown method: " + args.method);
  }
  if (args.method == "formula" && args.m < 3) {
    return emit_error_json(
        "formula_precondition",
        "the closed-form hierarchy requires m >= 3; for smaller m the code can "
        "degenerate below dimension m");
  }

  DefiningSetCode code(form, args.a);
  FormClassification cls = form.classify(args.a);

  if (code.dimension() != args.m) {
    ordered_json extra;
    extra["dimension"] = code.dimension();
    extra["required"] = args.m;
    return emit_error_json(
        "degenerate_dimension",
        "code dimension " + std::to_string(code.dimension()) + " is below m = " +
            std::to_string(args.m) +
            "; the subspace-intersection identity for d_r assumes a "
            "full-dimension code, so no hierarchy is reported",
        extra);
  }

  std::map<std::string, std::vector<Scalar>> hierarchy;
  std::map<std::string, std::int64_t> timings;
  for (const std::string& method : methods) {
    auto t0 = std::chrono::steady_clock::now();
    if (method == "wei") {
      hierarchy[method] = code.hierarchy_by_definition(args.jobs).values;
    } else if (method == "lemma1") {
      hierarchy[method] = code.hierarchy_by_intersection(args.jobs).values;
    } else {
      hierarchy[method] = closed_form_hierarchy(args.p, args.m, cls.epsilon, args.a).weights;
    }
    auto t1 = std::chrono::steady_clock::now();
    timings[method] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    std::cerr << "# " << method << " " << timings[method] << " ms\n";
  }

  bool agreement = true;
  for (const std::string& method : methods) {
    if (hierarchy[method] != hierarchy[methods.front()]) agreement = false;
  }

  if (args.out == "json") {
    ordered_json doc;
    doc["params"] = ordered_json::object();
    doc["params"]["p"] = args.p;
    doc["params"]["m"] = args.m;
    doc["params"]["modulus"] = spec.modulus();
    doc["params"]["form"] = args.form;
    doc["params"]["a"] = code.level();
    doc["params"]["method"] = args.method;
    doc["theorem"] = to_string(cls.theorem);
    doc["n"] = code.length();
    doc["dimension"] = code.dimension();
    doc["hierarchy"] = ordered_json::object();
    for (const std::string& method : methods) doc["hierarchy"][method] = hierarchy[method];
    doc["agreement"] = agreement;
    doc["timings_ms"] = ordered_json::object();
    if (args.timings) {
      for (const std::string& method : methods) doc["timings_ms"][method] = timings[method];
    }
    std::cout << doc.dump(2) << "\n";
  } else if (args.out == "csv") {
    std::cout << "p,m,form,a,theorem,r,d_r,method\n";
    for (const std::string& method : methods) {
      const auto& values = hierarchy[method];
      for (std::size_t r = 1; r <= values.size(); ++r) {
        std::cout << args.p << "," << args.m << "," << csv_quote(args.form) << ","
                  << code.level() << "," << to_string(cls.theorem) << "," << r << ","
                  << values[r - 1] << "," << method << "\n";
      }
    }
  } else {
    throw std::invalid_argument("unknown output format: " + args.out);
  }
  return agreement ? 0 : 2;
}

struct VerifyArgs {
  std::string p_list;
  std::string m_list;
  int extra_forms = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool force = false;
};

std::string join_scalars(const std::vector<Scalar>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string hierarchy_text(const std::vector<Scalar>& v) {
  return "[" + join_scalars(v, ',') + "]";
}

int run_verify(const VerifyArgs& args) {
  std::vector<std::pair<Scalar, int>> cells;
  if (args.p_list.empty() && args.m_list.empty()) {
    // The standing cross-check matrix: p=3 with m up to 5, p=5 kept to m=3.
    cells = {{3, 3}, {3, 4}, {3, 5}, {5, 3}};
  } else {
    auto ps = parse_scalar_list(args.p_list.empty() ? "3" : args.p_list);
    auto ms = parse_scalar_list(args.m_list.empty() ? "3,4" : args.m_list);
    for (Scalar p : ps) {
      for (Scalar m : ms) cells.emplace_back(p, static_cast<int>(m));
    }
  }

  for (auto [p, m] : cells) {
    Scalar order = 1;
    for (int i = 0; i < m && order <= kGuardrailOrder; ++i) order *= p;
    if (order > kGuardrailOrder && !args.force) {
      std::cout << "refusing p=" << p << " m=" << m
                << ": p^m exceeds the desk-scale guardrail " << kGuardrailOrder
                << " (pass --force to override)\n";
      return 1;
    }
  }

  std::mt19937 rng(static_cast<std::uint32_t>(args.seed));
  std::int64_t agreed = 0, failed = 0;

  for (auto [p, m] : cells) {
    FieldSpec spec(p, m);
    std::vector<std::pair<std::string, QuadraticForm>> forms;
    forms.emplace_back("identity", QuadraticForm::identity(spec));
    {
      std::vector<Scalar> diag(m, 1);
      diag[m - 1] = smallest_nonresidue(p);
      forms.emplace_back("diag:" + join_scalars(diag, ','),
                         QuadraticForm::from_diagonal(spec, diag));
    }
    forms.emplace_back("trace:1", QuadraticForm::from_trace_scale(spec, spec.one()));
    {
      FieldElement gamma = smallest_nonsquare(spec);
      forms.emplace_back("trace:" + std::to_string(spec.index_of(gamma)),
                         QuadraticForm::from_trace_scale(spec, gamma));
    }
    for (int extra = 0; extra < args.extra_forms; ++extra) {
      while (true) {
        std::vector<std::vector<Scalar>> gram(m, std::vector<Scalar>(m, 0));
        for (int i = 0; i < m; ++i) {
          for (int j = i; j < m; ++j) {
            gram[i][j] = gram[j][i] = static_cast<Scalar>(rng() % p);
          }
        }
        QuadraticForm candidate = QuadraticForm::from_gram(spec, gram);
        if (candidate.rank() != m) continue;
        std::string ser;
        for (int i = 0; i < m; ++i) {
          if (i) ser += ';';
          ser += join_scalars(gram[i], ',');
        }
        forms.emplace_back("gram:" + ser, candidate);
        break;
      }
    }

    for (const auto& [descriptor, form] : forms) {
      for (Scalar a = 0; a < p; ++a) {
        std::string head = "p=" + std::to_string(p) + " m=" + std::to_string(m) +
                           " form=" + descriptor + " a=" + std::to_string(a);
        try {
          DefiningSetCode code(form, a);
          FormClassification cls = form.classify(a);
          if (code.dimension() != m) {
            std::cout << head << " degenerate: dimension " << code.dimension()
                      << " < " << m << "\n";
            ++failed;
            continue;
          }
          auto wei = code.hierarchy_by_definition(args.jobs).values;
          auto lemma1 = code.hierarchy_by_intersection(args.jobs).values;
          auto formula = closed_form_hierarchy(p, m, cls.epsilon, a).weights;
          bool ok = wei == lemma1 && wei == formula &&
                    code.length() == predicted_length(p, m, cls.epsilon, a);
          if (ok) {
            std::cout << head << " theorem=" << to_string(cls.theorem)
                      << " n=" << code.length()
                      << " hierarchy=" << hierarchy_text(wei) << " agree\n";
            ++agreed;
          } else {
            std::cout << head << " theorem=" << to_string(cls.theorem)
                      << " DISAGREE wei=" << hierarchy_text(wei)
                      << " lemma1=" << hierarchy_text(lemma1)
                      << " formula=" << hierarchy_text(formula)
                      << " n=" << code.length() << " predicted="
                      << predicted_length(p, m, cls.epsilon, a) << "\n";
            ++failed;
          }
        } catch (const UnusableCodeError& e) {
          std::cout << head << " unusable: " << e.what() << "\n";
          ++failed;
        }
      }
    }
  }

  std::cout << "cells agreed: " << agreed << "/" << (agreed + failed) << "\n";
  return failed == 0 ? 0 : 2;
}

struct SearchArgs {
  Scalar p = 3;
  int m = 3;
  std::string form = "identity";
  std::string modulus;
  std::string task = "selfdual";
  bool exhaustive = false;
};

std::string subspace_count_noun(int dim, std::uint64_t count) {
  std::string number = std::to_string(count);
  if (dim == 1) return number + (count == 1 ? " line" : " lines");
  if (dim == 2) return number + (count == 1 ? " plane" : " planes");
  return number + " dimension-" + std::to_string(dim) + " subspaces";
}

int run_search(const SearchArgs& args) {
  FieldSpec spec = args.modulus.empty()
                       ? FieldSpec(args.p, args.m)
                       : FieldSpec(args.p, args.m, parse_scalar_list(args.modulus));
  QuadraticForm form = parse_form(spec, args.form);

  if (args.task.rfind("isotropic:", 0) == 0) {
    int r = static_cast<int>(std::stoll(args.task.substr(10)));
    IsotropicSearchResult res = find_totally_isotropic(form, r);
    if (res.found) {
      std::cout << "witness " << res.witness.to_string() << "\n";
    } else {
      std::cout << "none (stalled at dimension " << res.reached << ")\n";
    }
    return 0;
  }
  if (args.task == "selfdual") {
    SelfDualResult res = self_dual_subspace(form, false, args.exhaustive);
    if (res.exists) {
      std::cout << "witness " << res.witness.to_string() << "\n";
    } else if (res.certification == SelfDualCertification::kExhaustive) {
      std::cout << "none (exhaustive over "
                << subspace_count_noun(args.m / 2, res.examined) << ")\n";
    } else {
      std::cout << "none (sign condition)\n";
    }
    return 0;
  }
  throw std::invalid_argument("unknown task: " + args.task +
                              " (expected isotropic:<r> or selfdual)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"defining-set codes from quadratic forms: weight hierarchies, "
               "cross-checks, and subspace constructions"};
  app.require_subcommand(1);

  HierarchyArgs h;
  CLI::App* hier = app.add_subcommand(
      "hierarchy", "compute the weight hierarchy of one code by any method");
  hier->add_option("--p", h.p, "odd prime field characteristic")->required();
  hier->add_option("--m", h.m, "extension degree")->required();
  hier->add_option("--form", h.form, "identity | diag:... | gram:... | trace:enc");
  hier->add_option("--a", h.a, "level-set value defining the code");
  hier->add_option("--method", h.method, "wei | lemma1 | formula | all");
  hier->add_option("--modulus", h.modulus, "field modulus, ascending coefficients");
  hier->add_option("--jobs", h.jobs, "worker threads (never changes results)");
  hier->add_option("--out", h.out, "json | csv");
  hier->add_flag("--timings", h.timings, "fill timings_ms in the report");

  VerifyArgs v;
  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check all three hierarchy methods over a parameter matrix");
  verify->add_option("--p", v.p_list, "comma-separated primes");
  verify->add_option("--m", v.m_list, "comma-separated extension degrees");
  verify->add_option("--forms", v.extra_forms, "extra seeded random forms per cell");
  verify->add_option("--seed", v.seed, "seed for the extra forms");
  verify->add_option("--jobs", v.jobs, "worker threads (never changes results)");
  verify->add_flag("--force", v.force, "override the desk-scale guardrail");

  SearchArgs s;
  CLI::App* search = app.add_subcommand(
      "search", "construct totally isotropic or self-dual subspaces");
  search->add_option("--p", s.p, "odd prime field characteristic")->required();
  search->add_option("--m", s.m, "extension degree")->required();
  search->add_option("--form", s.form, "identity | diag:... | gram:... | trace:enc");
  search->add_option("--modulus", s.modulus, "field modulus, ascending coefficients");
  search->add_option("--task", s.task, "isotropic:<r> | selfdual");
  search->add_flag("--exhaustive", s.exhaustive,
                   "certify negative self-dual answers by exhaustion beyond m=4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (hier->parsed()) return run_hierarchy(h);
    if (verify->parsed()) return run_verify(v);
    return run_search(s);
  } catch (const DegenerateCodeError& e) {
    ordered_json extra;
    extra["dimension"] = e.dimension();
    extra["required"] = e.required();
    return emit_error_json("degenerate_dimension", e.what(), extra);
  } catch (const UnusableCodeError& e) {
    return emit_error_json("unusable_code", e.what());
  } catch (const std::invalid_argument& e) {
    return emit_error_json("precondition", e.what());
  } catch (const std::domain_error& e) {
    return emit_error_json("precondition", e.what());
  } catch (const std::logic_error& e) {
    static_cast<void>(emit_error_json("internal", e.what()));
    return 2;
  } catch (const std::exception& e) {
    return emit_error_json("precondition", e.what());
  }
}
