// Command-line front end: Gaussian coefficients, q-Kneser spectra, identity
// grids and brute-force spectrum certification.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or resource error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qkneser/finite_field.hpp"
#include "qkneser/grassmann.hpp"
#include "qkneser/identities.hpp"
#include "qkneser/laurent.hpp"
#include "qkneser/qbinom.hpp"
#include "qkneser/spectrum.hpp"

namespace {

using namespace qkneser;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

enum class Format { table, csv, json };

const std::map<std::string, Format> kFormats{{"table", Format::table}, {"csv", Format::csv}, {"json", Format::json}};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integers that fit int64 become JSON numbers, anything larger a string.
json integer_json(const BigInt& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    os << line << '\n';
  }
  return os.str();
}

BigInt parse_q(const std::string& text) {
  BigInt q;
  if (q.set_str(text, 10) != 0) throw UsageError("--q must be an integer, got '" + text + "'");
  if (q < 2) throw UsageError("q must be at least 2, got " + text);
  return q;
}

FieldCtx field_for(const std::string& text) {
  BigInt q = parse_q(text);
  auto pp = prime_power_decomposition(q);
  if (!pp) throw UsageError("q=" + text + " is not a prime power");
  try {
    return make_field(pp->p, pp->e);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// ---------------------------------------------------------------------------

struct GaussArgs {
  long long n = 0;
  long long i = 0;
  std::string q;
  Format format = Format::table;
};

int run_gauss(const GaussArgs& args) {
  if (args.i < 0) throw UsageError("i must be nonnegative");
  std::string value;
  json q_json = nullptr;
  if (args.q.empty()) {
    value = to_string(gauss(args.n, args.i));
  } else {
    BigInt q = parse_q(args.q);
    value = to_string(evaluate(gauss(args.n, args.i), q));
    q_json = integer_json(q);
  }
  switch (args.format) {
    case Format::table:
      std::cout << value << '\n';
      break;
    case Format::csv:
      std::cout << "n,i,q,value\n" << args.n << ',' << args.i << ',' << args.q << ',' << value << '\n';
      break;
    case Format::json:
      std::cout << json{{"n", args.n}, {"i", args.i}, {"q", q_json}, {"value", value}}.dump() << '\n';
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct EigenArgs {
  long long v = 0;
  long long k = 0;
  std::string q;
  std::string form = "simple";
  Format format = Format::table;
};

int run_eigenvalues(const EigenArgs& args) {
  if (args.k < 1) throw UsageError("k must be at least 1");
  const bool both = args.form == "both";
  SpectrumTable simple = spectrum_table(args.v, args.k, EigenvalueForm::simple);
  SpectrumTable delsarte = spectrum_table(args.v, args.k, EigenvalueForm::delsarte);
  const SpectrumTable& primary = args.form == "delsarte" ? delsarte : simple;

  std::optional<BigInt> q;
  if (!args.q.empty()) {
    q = parse_q(args.q);
    if (!prime_power_decomposition(*q)) throw UsageError("q=" + args.q + " is not a prime power");
  }

  bool agree = true;
  struct Row {
    std::int64_t j;
    std::string ev, ev_delsarte, mult;
    json ev_json, ev_delsarte_json, mult_json;
  };
  std::vector<Row> rows;
  for (std::size_t idx = 0; idx < primary.entries.size(); ++idx) {
    const auto& e = primary.entries[idx];
    const auto& d = delsarte.entries[idx];
    agree = agree && simple.entries[idx].eigenvalue == d.eigenvalue;
    Row r{e.j, {}, {}, {}, {}, {}, {}};
    if (q) {
      BigInt ev = evaluate_integer(e.eigenvalue, *q), dv = evaluate_integer(d.eigenvalue, *q),
             mv = evaluate_integer(e.multiplicity, *q);
      r.ev = ev.get_str();
      r.ev_delsarte = dv.get_str();
      r.mult = mv.get_str();
      r.ev_json = integer_json(ev);
      r.ev_delsarte_json = integer_json(dv);
      r.mult_json = integer_json(mv);
    } else {
      r.ev = to_string(e.eigenvalue);
      r.ev_delsarte = to_string(d.eigenvalue);
      r.mult = to_string(e.multiplicity);
      r.ev_json = r.ev;
      r.ev_delsarte_json = r.ev_delsarte;
      r.mult_json = r.mult;
    }
    rows.push_back(std::move(r));
  }

  switch (args.format) {
    case Format::table: {
      std::vector<std::vector<std::string>> cells;
      if (both)
        cells.push_back({"j", "eigenvalue", "eigenvalue_delsarte", "multiplicity"});
      else
        cells.push_back({"j", "eigenvalue", "multiplicity"});
      for (const auto& r : rows) {
        if (both)
          cells.push_back({std::to_string(r.j), r.ev, r.ev_delsarte, r.mult});
        else
          cells.push_back({std::to_string(r.j), r.ev, r.mult});
      }
      std::cout << render_columns(cells);
      break;
    }
    case Format::csv:
      std::cout << (both ? "j,eigenvalue,eigenvalue_delsarte,multiplicity\n" : "j,eigenvalue,multiplicity\n");
      for (const auto& r : rows) {
        std::cout << r.j << ',' << r.ev;
        if (both) std::cout << ',' << r.ev_delsarte;
        std::cout << ',' << r.mult << '\n';
      }
      break;
    case Format::json: {
      json entries = json::array();
      for (const auto& r : rows) {
        json e{{"j", r.j}, {"eigenvalue", r.ev_json}, {"multiplicity", r.mult_json}};
        if (both) e["eigenvalue_delsarte"] = r.ev_delsarte_json;
        entries.push_back(e);
      }
      std::cout << json{{"v", args.v}, {"k", args.k}, {"q", q ? integer_json(*q) : json(nullptr)}, {"entries", entries}}
                       .dump()
                << '\n';
      break;
    }
  }
  if (both && !agree) {
    std::cerr << "error: the two eigenvalue forms disagree\n";
    return kExitFailed;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct IdentityArgs {
  long long max = 10;
  long long perturb = 0;
  Format format = Format::table;
};

int run_verify_identities(const IdentityArgs& args) {
  if (args.max < 1) throw UsageError("--max must be at least 1");
  if (args.max + 2 > kMaxGridParameter) throw UsageError("--max must be at most " + std::to_string(kMaxGridParameter - 2));
  std::vector<IdentityReport> reports;
  bool passed = true;
  for (IdentityId id : kAllIdentities) {
    reports.push_back(run_grid(id, default_bounds(id, args.max), CheckOptions{args.perturb}));
    passed = passed && reports.back().passed();
  }
  if (args.format == Format::json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    std::cout << json{{"max", args.max}, {"passed", passed}, {"reports", arr}}.dump() << '\n';
  } else if (args.format == Format::csv) {
    std::cout << "identity,instances,failures\n";
    for (const auto& r : reports) std::cout << identity_name(r.id) << ',' << r.instances << ',' << r.failures.size() << '\n';
  } else {
    std::cout << render_table(reports);
    std::cout << (passed ? "all identities hold\n" : "IDENTITY FAILURES FOUND\n");
  }
  return passed ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------------------

struct SpectrumArgs {
  long long v = 0;
  long long k = 0;
  std::string q;
  std::size_t budget = kDefaultVertexBudget;
  std::string dump;
  Format format = Format::table;
};

int run_verify_spectrum(const SpectrumArgs& args) {
  if (args.k < 1) throw UsageError("k must be at least 1");
  require_kneser_parameters(args.v, args.k);
  FieldCtx ctx = field_for(args.q);
  const BigInt q(ctx.order());
  const EvaluatedSpectrum predicted = spectrum_table(args.v, args.k, q);

  auto vertices = enumerate_subspaces(ctx, static_cast<int>(args.v), static_cast<int>(args.k), args.budget);
  AdjacencyBits bits = build_adjacency_bits(ctx, vertices);
  CertificationResult result = certify_spectrum(bits.widen(), predicted);

  if (!args.dump.empty()) {
    std::filesystem::create_directories(args.dump);
    std::ofstream vf(std::filesystem::path(args.dump) / "vertices.txt");
    write_vertex_file(vf, vertices);
    std::ofstream af(std::filesystem::path(args.dump) / "adjacency.txt");
    write_adjacency_file(af, bits);
    std::ofstream cf(std::filesystem::path(args.dump) / "certification.json");
    cf << to_json(result).dump(2) << '\n';
    if (!vf || !af || !cf) throw UsageError("could not write dump files to " + args.dump);
  }

  if (args.format == Format::json) {
    std::cout << to_json(result).dump() << '\n';
  } else {
    const BigInt predicted_vertices = evaluate_integer(gauss(args.v, args.k), q);
    std::cout << "qK(" << args.v << "," << args.k << ") over GF(" << q << ")\n";
    std::cout << "vertices: " << result.vertex_count << " (predicted " << predicted_vertices << ")\n";
    std::cout << "degree: " << (result.degree ? result.degree->get_str() : std::string("irregular")) << " (predicted "
              << predicted.entries.front().eigenvalue << ")\n";
    std::vector<std::vector<std::string>> cells{{"j", "eigenvalue", "multiplicity", "measured_multiplicity"}};
    for (std::size_t idx = 0; idx < predicted.entries.size(); ++idx) {
      const auto& e = predicted.entries[idx];
      cells.push_back({std::to_string(e.j), e.eigenvalue.get_str(), e.multiplicity.get_str(),
                       to_string(result.multiplicities[idx])});
    }
    std::cout << render_columns(cells);
    for (std::size_t m = 0; m < result.moments.size(); ++m)
      std::cout << "tr(A^" << m << ") = " << result.moments[m] << " (predicted " << result.predicted_moments[m] << ")\n";
    std::cout << "annihilating product: " << (result.annihilation_ok ? "zero" : "NONZERO");
    if (result.residual)
      std::cout << " (entry " << result.residual->row << "," << result.residual->col << " = " << result.residual->value
                << ")";
    std::cout << "\nmoments: " << (result.moments_ok ? "match" : "MISMATCH");
    if (result.first_moment_mismatch) std::cout << " (first at m=" << *result.first_moment_mismatch << ")";
    std::cout << "\nresult: " << (result.certified() ? "CERTIFIED" : "NOT CERTIFIED") << '\n';
  }
  return result.certified() ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------------------

struct CountArgs {
  long long v = 0;
  long long k = 0;
  std::string q;
  std::size_t budget = kDefaultVertexBudget;
};

int run_count(const CountArgs& args) {
  if (args.k < 0 || args.v < 0 || args.k > args.v) throw UsageError("need 0 <= k <= v");
  FieldCtx ctx = field_for(args.q);
  auto vertices = enumerate_subspaces(ctx, static_cast<int>(args.v), static_cast<int>(args.k), args.budget);
  const BigInt formula = evaluate_integer(gauss(args.v, args.k), BigInt(ctx.order()));
  const bool same = formula == vertices.size();
  std::cout << vertices.size() << (same ? " = " : " != ") << formula << '\n';
  return same ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian binomial coefficients and q-Kneser graph spectra"};
  app.require_subcommand(1);

  auto add_format = [](CLI::App* cmd, Format& target) {
    cmd->add_option("--format", target, "Output format: table, csv or json")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };

  GaussArgs gauss_args;
  auto* gauss_cmd = app.add_subcommand("gauss", "Gaussian coefficient [n choose i]_q");
  gauss_cmd->add_option("n", gauss_args.n, "Top (any integer)")->required();
  gauss_cmd->add_option("i", gauss_args.i, "Bottom (nonnegative)")->required();
  gauss_cmd->add_option("--q", gauss_args.q, "Evaluate at this integer q >= 2");
  add_format(gauss_cmd, gauss_args.format);

  EigenArgs eig_args;
  auto* eig_cmd = app.add_subcommand("eigenvalues", "Eigenvalues and multiplicities of qK(v,k)");
  eig_cmd->add_option("v", eig_args.v)->required();
  eig_cmd->add_option("k", eig_args.k)->required();
  eig_cmd->add_option("--q", eig_args.q, "Evaluate at this prime power");
  eig_cmd->add_option("--form", eig_args.form, "simple, delsarte or both")
      ->check(CLI::IsMember({"simple", "delsarte", "both"}));
  add_format(eig_cmd, eig_args.format);

  auto* verify_cmd = app.add_subcommand("verify", "Verification suites");
  verify_cmd->require_subcommand(1);

  IdentityArgs id_args;
  auto* id_cmd = verify_cmd->add_subcommand("identities", "Check all identities over parameter grids");
  id_cmd->add_option("--max", id_args.max, "Grid bound N (default 10)");
  // Testing hook: breaks every identity by shifting its right-hand monomial.
  id_cmd->add_option("--perturb-exponent", id_args.perturb)->group("");
  add_format(id_cmd, id_args.format);

  SpectrumArgs sp_args;
  auto* sp_cmd = verify_cmd->add_subcommand("spectrum", "Certify the spectrum of qK(v,k) by brute force");
  sp_cmd->add_option("v", sp_args.v)->required();
  sp_cmd->add_option("k", sp_args.k)->required();
  sp_cmd->add_option("q", sp_args.q)->required();
  sp_cmd->add_option("--budget", sp_args.budget, "Maximum vertex count (default 2000)");
  sp_cmd->add_option("--dump", sp_args.dump, "Write vertices, adjacency and certificate to this directory");
  add_format(sp_cmd, sp_args.format);

  CountArgs count_args;
  auto* count_cmd = app.add_subcommand("count-subspaces", "Count k-subspaces of F_q^v two ways");
  count_cmd->add_option("v", count_args.v)->required();
  count_cmd->add_option("k", count_args.k)->required();
  count_cmd->add_option("q", count_args.q)->required();
  count_cmd->add_option("--budget", count_args.budget, "Maximum vertex count (default 2000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gauss_cmd) return run_gauss(gauss_args);
    if (*eig_cmd) return run_eigenvalues(eig_args);
    if (*id_cmd) return run_verify_identities(id_args);
    if (*sp_cmd) return run_verify_spectrum(sp_args);
    if (*count_cmd) return run_count(count_args);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
