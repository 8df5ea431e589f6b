#include "rsinv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rsinv/direct_maps.hpp"
#include "rsinv/enumeration.hpp"
#include "rsinv/error.hpp"
#include "rsinv/greene.hpp"
#include "rsinv/rsk.hpp"
#include "rsinv/verify.hpp"

namespace rsinv::cli {

namespace {

// Raised for method disagreements; maps to exit code 1.
struct Mismatch {
  std::string message;
};

void print_rows(std::ostream& out, const Tableau& t) {
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const Permutation& pattern_123() {
  static const Permutation q({1, 2, 3});
  return q;
}

// Direct (RS-free) f: the GFK-tight construction when it applies, otherwise
// the 123-avoiding one.
std::optional<std::pair<std::string, Permutation>> direct_f(const Permutation& p) {
  if (!is_involution(p)) throw Error(ErrorCode::NotInvolution, p.to_string());
  if (is_gfk_tight(p)) return std::pair{std::string("direct(gfk-tight)"), f_gfk_tight_direct(p)};
  if (!contains_pattern(p, pattern_123())) return std::pair{std::string("direct(123-avoiding)"), f_123_avoiding_direct(p)};
  return std::nullopt;
}

Permutation run_f(const Permutation& p, const std::string& method) {
  if (method == "rsk") return f_involution(p);
  if (method == "shortcut") return f_rev_shortcut(p);
  if (method == "direct") {
    if (auto d = direct_f(p)) return d->second;
    throw Error(ErrorCode::InvalidArgument, "no direct construction applies to " + p.to_string() +
                                                " (needs GFK-tight or 123-avoiding)");
  }
  // all
  const Permutation reference = f_involution(p);
  std::vector<std::pair<std::string, Permutation>> others;
  if (auto d = direct_f(p)) others.push_back(*d);
  if (!contains_pattern(p, pattern_123()) && is_gfk_tight(p)) {
    others.emplace_back("direct(123-avoiding)", f_123_avoiding_direct(p));
  }
  if (is_involution(reverse(p))) others.emplace_back("shortcut", f_rev_shortcut(p));
  for (const auto& [name, value] : others) {
    if (value != reference) {
      throw Mismatch{"methods disagree on " + p.to_string() + ": rsk=" + reference.to_string() + " " + name + "=" +
                     value.to_string()};
    }
  }
  return reference;
}

Tableau run_tableau(const Permutation& p, const std::string& method) {
  if (method == "rsk") return tableau_of_involution(p);
  if (method == "direct") return tableau_of_321_avoiding(p);
  const Tableau reference = tableau_of_involution(p);
  const Tableau direct = tableau_of_321_avoiding(p);
  if (direct != reference) {
    throw Mismatch{"methods disagree on " + p.to_string() + ": rsk=" + to_json(reference) + " direct=" + to_json(direct)};
  }
  return reference;
}

Permutation run_unrsk(const Tableau& P, const Tableau& Q, const std::string& method) {
  if (method == "rsk") return inverse_rsk({P, Q});
  if (P != Q) throw Error(ErrorCode::InvalidArgument, "direct recovery needs P == Q");
  if (method == "direct") return recover_321_avoiding(P);
  const Permutation reference = inverse_rsk({P, Q});
  const Permutation direct = recover_321_avoiding(P);
  if (direct != reference) {
    throw Mismatch{"methods disagree: rsk=" + reference.to_string() + " direct=" + direct.to_string()};
  }
  return reference;
}

bool run_check(const Permutation& p, const std::string& prop) {
  if (prop == "layered") return is_layered(p);
  if (prop == "involution") return is_involution(p);
  if (prop == "gfk-tight") return is_gfk_tight(p);
  if (prop == "dually-gfk-tight") return is_dually_gfk_tight(p);
  if (prop == "transposed-layer") return satisfies_transposed_layer(tableau_of_involution(p));
  const std::string prefix = "avoids:";
  if (prop.rfind(prefix, 0) == 0) return avoids(p, Permutation::parse(prop.substr(prefix.size())));
  throw Error(ErrorCode::InvalidArgument, "unknown property '" + prop + "'");
}

template <typename Stream, typename Print>
void drain(Stream stream, std::ostream& out, Print print) {
  while (auto v = stream.next()) print(out, *v);
}

void run_enumerate(const std::string& family, int n, std::ostream& out) {
  auto perm_line = [](std::ostream& o, const Permutation& p) { o << p.to_string() << '\n'; };
  if (family == "layered") {
    drain(LayeredPermutationStream(n), out, perm_line);
  } else if (family == "involutions") {
    drain(InvolutionStream(n), out, perm_line);
  } else if (family == "generalized") {
    drain(GeneralizedLayeredStream(n), out, perm_line);
  } else {
    drain(LayeredTableauStream(n), out, [](std::ostream& o, const Tableau& t) { o << to_json(t) << '\n'; });
  }
}

BigInt run_count(const std::string& what, int n) {
  if (what == "A") {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "A_n needs n >= 1");
    return count_A(n);
  }
  if (what == "layered") return count_layered(n);
  return count_involutions(n);
}

int run_verify(const std::string& suite_text, int max_n, std::ostream& out) {
  const auto suite = verify::parse_suite(suite_text);
  if (!suite) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + suite_text + "'");
  bool all_ok = true;
  for (const auto& [s, results] : verify::run_suites(*suite, max_n)) {
    bool suite_ok = true;
    std::uint64_t instances = 0;
    for (const auto& r : results) {
      out << "  " << (r.passed() ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.instances << " instances";
      if (r.failures) out << ", " << r.failures << " failed, first: " << r.first_failure;
      out << ")\n";
      suite_ok = suite_ok && r.passed();
      instances += r.instances;
    }
    out << "suite " << verify::suite_name(s) << ": " << (suite_ok ? "PASS" : "FAIL") << " (" << results.size()
        << " checks, " << instances << " instances, max-n " << max_n << ")\n";
    all_ok = all_ok && suite_ok;
  }
  return all_ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robinson-Schensted on involutions and the tableau-transpose involution", "rsinv"};
  app.require_subcommand(1);

  std::string perm_text;
  std::string method = "rsk";
  bool json = false;

  auto* rsk_cmd = app.add_subcommand("rsk", "Print the insertion and recording tableaux of a permutation");
  rsk_cmd->add_option("perm", perm_text, "Permutation, e.g. \"2 1 5 4 3\" or 21543")->required();
  rsk_cmd->add_flag("--json", json, "Emit {\"P\":{\"rows\":...},\"Q\":{\"rows\":...}}");

  std::string p_path;
  std::string q_path;
  auto* unrsk_cmd = app.add_subcommand("unrsk", "Recover the permutation of a tableau pair");
  unrsk_cmd->add_option("--p", p_path, "Insertion tableau JSON file")->required();
  unrsk_cmd->add_option("--q", q_path, "Recording tableau JSON file")->required();
  unrsk_cmd->add_option("--method", method)->check(CLI::IsMember({"rsk", "direct", "all"}));

  auto* f_cmd = app.add_subcommand("f", "Apply the tableau-transpose involution to an involution");
  f_cmd->add_option("perm", perm_text)->required();
  f_cmd->add_option("--method", method)->check(CLI::IsMember({"rsk", "direct", "shortcut", "all"}));

  auto* tableau_cmd = app.add_subcommand("tableau", "Print the tableau of an involution");
  tableau_cmd->add_option("perm", perm_text)->required();
  tableau_cmd->add_option("--method", method)->check(CLI::IsMember({"rsk", "direct", "all"}));
  tableau_cmd->add_flag("--json", json);

  std::string prop;
  auto* check_cmd = app.add_subcommand("check", "Test a property; exit 0 if true, 1 if false");
  check_cmd->add_option("perm", perm_text)->required();
  check_cmd->add_option("--prop", prop, "layered|involution|gfk-tight|dually-gfk-tight|transposed-layer|avoids:PATTERN")
      ->required();

  std::string family;
  int n = 0;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List a family, one item per line");
  enumerate_cmd->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"layered", "involutions", "layered-tableaux", "generalized"}));
  enumerate_cmd->add_option("--n", n)->required()->check(CLI::Range(0, 63));

  std::string what;
  auto* count_cmd = app.add_subcommand("count", "Exact counts");
  count_cmd->add_option("--what", what)->required()->check(CLI::IsMember({"A", "layered", "involutions"}));
  count_cmd->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);

  std::string suite = "all";
  int max_n = 7;
  auto* verify_cmd = app.add_subcommand("verify", "Run the exhaustive invariant suites");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"all", "rsk", "greene", "characterization", "counting"}));
  // Several checks sweep all of S_n, which stops being practical past 10.
  verify_cmd->add_option("--max-n", max_n)->check(CLI::Range(1, 10));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (rsk_cmd->parsed()) {
      const auto pair = rsk(Permutation::parse(perm_text));
      if (json) {
        nlohmann::json j;
        j["P"]["rows"] = pair.P.rows;
        j["Q"]["rows"] = pair.Q.rows;
        out << j.dump() << '\n';
      } else {
        out << "P\n";
        print_rows(out, pair.P);
        out << "Q\n";
        print_rows(out, pair.Q);
      }
    } else if (unrsk_cmd->parsed()) {
      const Tableau P = tableau_from_json(read_file(p_path));
      const Tableau Q = tableau_from_json(read_file(q_path));
      out << run_unrsk(P, Q, method).to_string() << '\n';
    } else if (f_cmd->parsed()) {
      out << run_f(Permutation::parse(perm_text), method).to_string() << '\n';
    } else if (tableau_cmd->parsed()) {
      const Tableau t = run_tableau(Permutation::parse(perm_text), method);
      if (json) {
        out << to_json(t) << '\n';
      } else {
        print_rows(out, t);
      }
    } else if (check_cmd->parsed()) {
      const bool result = run_check(Permutation::parse(perm_text), prop);
      out << (result ? "true" : "false") << '\n';
      return result ? kOk : kCheckFailed;
    } else if (enumerate_cmd->parsed()) {
      run_enumerate(family, n, out);
    } else if (count_cmd->parsed()) {
      out << run_count(what, n).str() << '\n';
    } else if (verify_cmd->parsed()) {
      return run_verify(suite, max_n, out);
    }
  } catch (const Mismatch& m) {
    err << "mismatch: " << m.message << '\n';
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kOk;
}

}  // namespace rsinv::cli
