#include "ordlat/cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "ordlat/axioms.hpp"
#include "ordlat/elattice.hpp"
#include "ordlat/error.hpp"
#include "ordlat/oracle.hpp"
#include "ordlat/reconstruct.hpp"
#include "ordlat/serialize.hpp"
#include "ordlat/spectra.hpp"

namespace ordlat::cli {

using nlohmann::json;

std::vector<Natural> parse_cyclic_factors(std::string_view spec) {
  std::string lowered;
  for (char c : spec) lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < lowered.size() && std::isspace(static_cast<unsigned char>(lowered[pos]))) ++pos;
  };

  skip_space();
  const std::size_t first = pos;
  std::size_t last = lowered.size();
  while (last > first && std::isspace(static_cast<unsigned char>(lowered[last - 1]))) --last;
  if (lowered.substr(first, last - first) == "trivial") return {};
  if (first == lowered.size()) throw ParseError(pos, "empty group spec");

  std::vector<Natural> factors;
  while (true) {
    skip_space();
    const std::size_t factor_start = pos;
    if (pos < lowered.size() && (lowered[pos] == 'z' || lowered[pos] == 'c')) {
      ++pos;
      skip_space();
    }
    const std::size_t digits_start = pos;
    while (pos < lowered.size() && std::isdigit(static_cast<unsigned char>(lowered[pos]))) ++pos;
    if (pos == digits_start) throw ParseError(pos, "expected a cyclic factor such as Z4 or 4");
    Natural n(lowered.substr(digits_start, pos - digits_start), 10);
    if (n <= 1) throw ParseError(factor_start, "cyclic factor must be at least 2, got " + to_decimal(n));
    factors.push_back(std::move(n));

    skip_space();
    if (pos == lowered.size()) break;
    const char sep = lowered[pos];
    if (sep != 'x' && sep != '*' && sep != ',') {
      throw ParseError(pos, std::string("unexpected character '") + spec[pos] + "'");
    }
    ++pos;
  }
  return factors;
}

AbelianGroup parse_group_spec(std::string_view spec) {
  return from_cyclic_factors(parse_cyclic_factors(spec));
}

namespace {

json decimal_array(const std::vector<Natural>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_decimal(x));
  return a;
}

std::string join_decimal(const std::vector<Natural>& xs, const char* sep) {
  std::string s;
  for (const auto& x : xs) {
    if (!s.empty()) s += sep;
    s += to_decimal(x);
  }
  return s;
}

int cmd_spectrum(const std::string& spec, bool as_json, std::ostream& out) {
  const auto g = parse_group_spec(spec);
  const auto s = spectrum(g);
  if (as_json) {
    out << dump(to_json(s));
    return kOk;
  }
  out << "# group: " << g.to_string() << "\n# exponent: " << to_decimal(s.exponent)
      << "\norder\tcount\n";
  for (const auto& [order, count] : s.entries) out << to_decimal(order) << '\t' << to_decimal(count) << '\n';
  return kOk;
}

int cmd_count(const std::string& spec, const std::string& d, bool as_json, std::ostream& out) {
  const auto g = parse_group_spec(spec);
  const Natural order = parse_natural(d);
  const Natural n = count_order(g, order);
  if (as_json) {
    out << dump({{"group", g.to_string()}, {"order", to_decimal(order)}, {"count", to_decimal(n)}});
  } else {
    out << to_decimal(n) << '\n';
  }
  return kOk;
}

int cmd_lattice(const std::string& spec, const std::string& format, std::ostream& out) {
  const auto g = parse_group_spec(spec);
  const auto d = descriptor(g);
  if (format == "json") {
    out << dump(to_json(d));
  } else if (format == "dot") {
    out << to_dot(d, g.to_string());
  } else {
    const auto& lat = d.fix_lattice;
    out << "# group: " << g.to_string() << "\n# fix lattice: divisors of " << to_decimal(lat.base().value())
        << "\norder\tcount\n";
    for (std::size_t i = 0; i < lat.size(); ++i) {
      out << to_decimal(lat.value(i)) << '\t' << to_decimal(d.class_size_of(i)) << '\n';
    }
    out << "covers:\n";
    for (const auto& [lo, hi] : lat.covering_edges()) {
      out << to_decimal(lat.value(lo)) << " < " << to_decimal(lat.value(hi)) << '\n';
    }
  }
  return kOk;
}

int cmd_iso(const std::string& a, const std::string& b, bool as_json, std::ostream& out) {
  const auto g = parse_group_spec(a);
  const auto h = parse_group_spec(b);
  const auto r = iso(g, h);
  if (as_json) {
    json witness = json::array();
    for (const auto& [p, q] : r.witness) witness.push_back({to_decimal(p), to_decimal(q)});
    json j{{"left", g.to_string()}, {"right", h.to_string()}, {"decision", r.decision()}};
    if (r.isomorphic) {
      j["witness"] = std::move(witness);
    } else {
      j["reason"] = r.reason;
    }
    out << dump(j);
  } else {
    out << r.decision() << '\n';
    if (r.isomorphic) {
      out << "witness:";
      for (const auto& [p, q] : r.witness) out << ' ' << to_decimal(p) << "->" << to_decimal(q);
      out << '\n';
    } else {
      out << "reason: " << r.reason << '\n';
    }
  }
  return r.isomorphic ? kOk : kDomainFailure;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

int cmd_reconstruct(const std::string& path, const std::string& expect, bool as_json, std::ostream& out,
                    std::ostream& err) {
  std::optional<AbelianGroup> expected;
  if (!expect.empty()) expected = parse_group_spec(expect);
  const auto candidate = candidate_from_json(read_input(path));
  try {
    const auto g = reconstruct(candidate);
    const bool matches = !expected || *expected == g;
    if (as_json) {
      json j{{"realizable", true}, {"group", g.to_string()}, {"invariant_factors", decimal_array(g.invariant_factors())}};
      if (expected) {
        j["expected"] = expected->to_string();
        j["matches"] = matches;
      }
      out << dump(j);
    } else {
      out << g.to_string() << '\n';
    }
    if (!matches) {
      err << "mismatch: reconstructed " << g.to_string() << ", expected " << expected->to_string() << '\n';
      return kDomainFailure;
    }
    return kOk;
  } catch (const NotRealizable& e) {
    if (as_json) {
      out << dump({{"realizable", false}, {"reason", reason_code(e.reason())}, {"detail", e.what()}});
    } else {
      out << "not_realizable " << reason_code(e.reason()) << '\n';
    }
    err << "not realizable: " << e.what() << '\n';
    return kDomainFailure;
  }
}

int cmd_verify(const std::string& spec, std::uint64_t cap, bool as_json, std::ostream& out) {
  const auto factors = parse_cyclic_factors(spec);
  const auto g = from_cyclic_factors(factors);
  const auto formula = spectrum(g);
  const auto brute = oracle::enumerate_spectrum(factors, cap);

  std::map<Natural, std::pair<Natural, Natural>> rows;
  for (const auto& [o, c] : formula.entries) rows[o].first = c;
  for (const auto& [o, c] : brute.entries) rows[o].second = c;
  bool agree = true;
  json jrows = json::array();
  std::ostringstream text;
  text << "# group: " << g.to_string() << "\norder\tformula\toracle\n";
  for (const auto& [o, fc] : rows) {
    const bool same = fc.first == fc.second;
    agree = agree && same;
    jrows.push_back({{"order", to_decimal(o)}, {"formula", to_decimal(fc.first)},
                     {"oracle", to_decimal(fc.second)}, {"agree", same}});
    text << to_decimal(o) << '\t' << to_decimal(fc.first) << '\t' << to_decimal(fc.second)
         << (same ? "" : "\tMISMATCH") << '\n';
  }
  if (as_json) {
    out << dump({{"group", g.to_string()}, {"agree", agree}, {"rows", std::move(jrows)}});
  } else {
    out << text.str() << (agree ? "agree" : "mismatch") << '\n';
  }
  return agree ? kOk : kDomainFailure;
}

int cmd_canonical(const std::string& spec, bool as_json, std::ostream& out) {
  const auto g = parse_group_spec(spec);
  if (as_json) {
    json comps = json::array();
    for (const auto& c : g.components()) {
      json parts = json::array();
      for (auto a : c.partition()) parts.push_back(std::to_string(a));
      comps.push_back({{"prime", to_decimal(c.prime())}, {"partition", std::move(parts)}});
    }
    out << dump({{"group", g.to_string()},
                 {"invariant_factors", decimal_array(g.invariant_factors())},
                 {"order", to_decimal(g.order())},
                 {"exponent", to_decimal(g.exponent())},
                 {"components", std::move(comps)}});
    return kOk;
  }
  out << "group: " << g.to_string() << '\n'
      << "invariant factors: " << join_decimal(g.invariant_factors(), " ") << '\n'
      << "order: " << to_decimal(g.order()) << '\n'
      << "exponent: " << to_decimal(g.exponent()) << '\n'
      << "primary:";
  for (const auto& c : g.components()) {
    out << ' ' << to_decimal(c.prime()) << "^[";
    for (std::size_t i = 0; i < c.partition().size(); ++i) out << (i ? "," : "") << c.partition()[i];
    out << ']';
  }
  out << '\n';
  return kOk;
}

int cmd_axioms(const std::string& spec, std::uint64_t cap, std::size_t triple_cap, bool as_json,
               std::ostream& out) {
  const auto g = parse_group_spec(spec);
  const auto e = build_explicit(g, cap);
  const auto report = check_axioms(e, {.triple_cap = triple_cap, .pair_cap = cap});
  if (as_json) {
    json results = json::array();
    for (const auto& r : report.results) {
      json j{{"axiom", r.name}, {"status", status_name(r.status)}};
      if (r.status != AxiomStatus::kPass) j["detail"] = r.detail;
      if (!r.witness.empty()) {
        json w = json::array();
        for (auto x : r.witness) w.push_back(std::to_string(x));
        j["witness"] = std::move(w);
      }
      results.push_back(std::move(j));
    }
    out << dump({{"group", g.to_string()}, {"carrier_size", std::to_string(report.carrier_size)},
                 {"passed", report.passed()}, {"results", std::move(results)}});
  } else {
    out << "# group: " << g.to_string() << " (" << report.carrier_size << " elements)\n";
    for (const auto& r : report.results) {
      out << r.name << ": " << status_name(r.status);
      if (r.status != AxiomStatus::kPass) out << " (" << r.detail << ')';
      out << '\n';
    }
    out << (report.passed() ? "pass" : "fail") << '\n';
  }
  return report.passed() ? kOk : kDomainFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Element-order spectra and order canonical E-lattices of finite abelian groups", "ordlat"};
  app.require_subcommand(1, 1);

  bool as_json = false;
  std::string group_a, group_b, order_arg, path, expect;
  std::string format = "text";
  std::uint64_t cap = 0;
  std::size_t triple_cap = AxiomOptions{}.triple_cap;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Count the elements of every order");
  spectrum_cmd->add_option("group", group_a, "group spec, e.g. \"Z4 x Z16\"")->required();
  spectrum_cmd->add_flag("--json", as_json, "emit JSON");

  auto* count_cmd = app.add_subcommand("count", "Count the elements of one order");
  count_cmd->add_option("group", group_a)->required();
  count_cmd->add_option("order", order_arg)->required();
  count_cmd->add_flag("--json", as_json);

  auto* lattice_cmd = app.add_subcommand("lattice", "Order canonical E-lattice descriptor");
  lattice_cmd->add_option("group", group_a)->required();
  lattice_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "dot", "json"}));
  lattice_cmd->add_flag("--json", as_json, "same as --format json");

  auto* iso_cmd = app.add_subcommand("iso", "Decide E-lattice isomorphism (exit 0 iff isomorphic)");
  iso_cmd->add_option("left", group_a)->required();
  iso_cmd->add_option("right", group_b)->required();
  iso_cmd->add_flag("--json", as_json);

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Recover a group from a spectrum JSON file");
  reconstruct_cmd->add_option("file", path, "spectrum JSON, or - for stdin")->required();
  reconstruct_cmd->add_option("--expect", expect, "group the spectrum must reconstruct to");
  reconstruct_cmd->add_flag("--json", as_json);

  auto* verify_cmd = app.add_subcommand("verify", "Compare the formula against brute-force enumeration");
  verify_cmd->add_option("group", group_a)->required();
  verify_cmd->add_option("--cap", cap, "enumeration cap")->default_str(std::to_string(oracle::kDefaultEnumerationCap));
  verify_cmd->add_flag("--json", as_json);

  auto* canonical_cmd = app.add_subcommand("canonical", "Invariant factors and primary decomposition");
  canonical_cmd->add_option("group", group_a)->required();
  canonical_cmd->add_flag("--json", as_json);

  auto* axioms_cmd = app.add_subcommand("axioms", "Check the E-lattice axioms on the explicit carrier");
  axioms_cmd->add_option("group", group_a)->required();
  axioms_cmd->add_option("--cap", cap, "element cap")->default_str(std::to_string(kDefaultElementCap));
  axioms_cmd->add_option("--triple-cap", triple_cap, "largest carrier checked for associativity");
  axioms_cmd->add_flag("--json", as_json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (spectrum_cmd->parsed()) return cmd_spectrum(group_a, as_json, out);
    if (count_cmd->parsed()) return cmd_count(group_a, order_arg, as_json, out);
    if (lattice_cmd->parsed()) return cmd_lattice(group_a, as_json ? "json" : format, out);
    if (iso_cmd->parsed()) return cmd_iso(group_a, group_b, as_json, out);
    if (reconstruct_cmd->parsed()) return cmd_reconstruct(path, expect, as_json, out, err);
    if (verify_cmd->parsed()) {
      return cmd_verify(group_a, cap == 0 ? oracle::kDefaultEnumerationCap : cap, as_json, out);
    }
    if (canonical_cmd->parsed()) return cmd_canonical(group_a, as_json, out);
    if (axioms_cmd->parsed()) {
      return cmd_axioms(group_a, cap == 0 ? kDefaultElementCap : cap, triple_cap, as_json, out);
    }
  } catch (const ParseError& e) {
    err << "parse error " << e.what() << '\n';
    return kUsageError;
  } catch (const NotRealizable& e) {
    err << "not realizable: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace ordlat::cli
