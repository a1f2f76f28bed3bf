// descents — exact computations in the Eulerian descent algebras of the
// symmetric and hyperoctahedral groups, with verification subcommands.

#include "descents/errors.hpp"
#include "descents/json_io.hpp"
#include "descents/ppartition.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace descents;

void emit(const Json& j) { std::cout << j.dump(2) << std::endl; }

StructureKind kind_from_flag(const std::string& name) {
  static const std::map<std::string, StructureKind> table{
      {"a", StructureKind::TypeA},
      {"cyclic", StructureKind::Cyclic},
      {"b", StructureKind::TypeB},
      {"aug", StructureKind::Augmented},
  };
  auto it = table.find(name);
  if (it == table.end()) throw DomainError("unknown kind '" + name + "'");
  return it->second;
}

PartitionFlavor flavor_from_flag(const std::string& name) {
  if (name == "ordinary") return PartitionFlavor::Ordinary;
  if (name == "typeb") return PartitionFlavor::TypeB;
  if (name == "aug") return PartitionFlavor::Augmented;
  throw DomainError("unknown flavor '" + name + "'");
}

std::variant<Poset, BPoset> load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open poset file '" + path + "'");
  return parse_poset(in);
}

struct StatsArgs {
  std::string perm;
  bool is_signed = false;
};

struct EulerianArgs {
  int n = 0;
  std::string kind;
};

struct OrderPolyArgs {
  std::string poset_file;
  long k = 0;
  std::string flavor = "ordinary";
  bool q = false;
  bool closed = false;
  std::string perm;
};

struct ElementArgs {
  int n = 0;
  std::string kind;
  int eulerian = 0;
  std::string structure;
  int loday = 0;
  bool bar_variant = false;
};

struct VerifyArgs {
  int n = 0;
  std::string identity;
  int threads = 1;
};

struct QVerifyArgs {
  int n = 0;
  std::string pair;
  long k = 1;
  long l = 1;
};

struct ShuffleArgs {
  int n = 0;
  long a = 0;
  int m = 0;
  bool tvd = false;
  std::string format = "json";
  int decimal = -1;
};

int run_stats(const StatsArgs& args) {
  if (args.is_signed) {
    const auto pi = parse_signed_permutation(args.perm);
    emit(record_to_json(signed_descent_stats(pi), pi.size()));
  } else {
    const auto pi = parse_permutation(args.perm);
    emit(record_to_json(descent_stats(pi), pi.size()));
  }
  return 0;
}

int run_eulerian(const EulerianArgs& args) {
  const auto kind = kind_from_flag(args.kind);
  emit(histogram_to_json(eulerian_polynomial(args.n, kind), kind, args.n));
  return 0;
}

int run_orderpoly(const OrderPolyArgs& args) {
  const auto flavor = flavor_from_flag(args.flavor);
  Json out;
  out["flavor"] = args.flavor;
  out["k"] = args.k;
  if (args.closed) {
    if (args.perm.empty()) throw DomainError("--closed needs --perm");
    if (flavor == PartitionFlavor::Ordinary) {
      const auto pi = parse_permutation(args.perm);
      const auto chain = chain_poset(pi);
      if (args.q) {
        const QPolynomial closed = q_order_poly_closed(pi, args.k);
        const QPolynomial oracle = q_count_partitions(chain, args.k);
        out["closed"] = qpolynomial_to_json(closed);
        out["oracle"] = qpolynomial_to_json(oracle);
        out["match"] = closed == oracle;
      } else {
        const Integer closed = order_poly_closed(pi, args.k);
        const Integer oracle = count_partitions(chain, args.k);
        out["closed"] = closed.get_str();
        out["oracle"] = oracle.get_str();
        out["match"] = closed == oracle;
      }
    } else {
      const auto pi = parse_signed_permutation(args.perm);
      const auto chain = chain_bposet(pi);
      if (args.q) {
        const QPolynomial closed = q_order_poly_closed(pi, args.k, flavor);
        const QPolynomial oracle = q_count_partitions(chain, args.k, flavor);
        out["closed"] = qpolynomial_to_json(closed);
        out["oracle"] = qpolynomial_to_json(oracle);
        out["match"] = closed == oracle;
      } else {
        const Integer closed = order_poly_closed(pi, args.k, flavor);
        const Integer oracle = count_partitions(chain, args.k, flavor);
        out["closed"] = closed.get_str();
        out["oracle"] = oracle.get_str();
        out["match"] = closed == oracle;
      }
    }
    emit(out);
    return out["match"].get<bool>() ? 0 : 1;
  }

  if (args.poset_file.empty()) throw DomainError("orderpoly needs --poset (or --closed --perm)");
  const auto poset = load_poset(args.poset_file);
  if (std::holds_alternative<Poset>(poset)) {
    if (flavor != PartitionFlavor::Ordinary)
      throw DomainError("type A poset files take --flavor ordinary");
    const auto& p = std::get<Poset>(poset);
    if (args.q)
      out["q_polynomial"] = qpolynomial_to_json(q_count_partitions(p, args.k));
    else
      out["count"] = count_partitions(p, args.k).get_str();
  } else {
    if (flavor == PartitionFlavor::Ordinary)
      throw DomainError("type B poset files take --flavor typeb or aug");
    const auto& p = std::get<BPoset>(poset);
    if (args.q)
      out["q_polynomial"] = qpolynomial_to_json(q_count_partitions(p, args.k, flavor));
    else
      out["count"] = count_partitions(p, args.k, flavor).get_str();
  }
  emit(out);
  return 0;
}

int run_linext(const std::string& poset_file) {
  const auto poset = load_poset(poset_file);
  Json exts = Json::array();
  if (std::holds_alternative<Poset>(poset)) {
    for (const auto& pi : linear_extensions(std::get<Poset>(poset))) exts.push_back(pi.window());
  } else {
    for (const auto& pi : linear_extensions(std::get<BPoset>(poset))) exts.push_back(pi.window());
  }
  Json out;
  out["count"] = exts.size();
  out["extensions"] = std::move(exts);
  emit(out);
  return 0;
}

int run_element(const ElementArgs& args) {
  const auto kind = kind_from_flag(args.kind);
  const int chosen = (args.eulerian ? 1 : 0) + (!args.structure.empty() ? 1 : 0) +
                     (args.loday ? 1 : 0);
  if (chosen != 1)
    throw DomainError("element needs exactly one of --eulerian, --structure, --loday");
  if (args.loday) {
    if (group_of(kind) != GroupKind::A || kind != StructureKind::TypeA)
      throw DomainError("--loday applies to --kind a");
    auto [ell, lambda] = loday_elements(args.n, args.loday);
    if (args.bar_variant) {
      ell = bar(ell);
      lambda = bar(lambda);
    }
    Json out;
    out["l"] = element_to_json(ell);
    out["lambda"] = element_to_json(lambda);
    emit(out);
    return 0;
  }
  RationalElement result = args.eulerian
                               ? eulerian_element(args.n, kind, args.eulerian)
                               : structure_poly_eval(args.n, kind,
                                                     rational_from_string(args.structure));
  if (args.bar_variant) result = bar(result);
  emit(element_to_json(result));
  return 0;
}

int run_idempotents(int n, const std::string& kind) {
  emit(family_to_json(structure_poly_coeffs(n, kind_from_flag(kind))));
  return 0;
}

int run_verify(const VerifyArgs& args) {
  VerifyOptions options;
  options.threads = args.threads;
  VerificationReport report;
  if (args.identity == "a")
    report = verify_product_identity(args.n, StructureKind::TypeA, StructureKind::TypeA,
                                     ProductLaw::XY, options);
  else if (args.identity == "cyclic")
    report = verify_product_identity(args.n, StructureKind::Cyclic, StructureKind::Cyclic,
                                     ProductLaw::XY, options);
  else if (args.identity == "b")
    report = verify_product_identity(args.n, StructureKind::TypeB, StructureKind::TypeB,
                                     ProductLaw::TwoXYPlusXPlusY, options);
  else if (args.identity == "aug")
    report = verify_product_identity(args.n, StructureKind::Augmented, StructureKind::Augmented,
                                     ProductLaw::TwoXY, options);
  else if (args.identity == "mixed")
    report = verify_product_identity(args.n, StructureKind::Augmented, StructureKind::TypeB,
                                     ProductLaw::TwoXYPlusX, options);
  else if (args.identity == "loday")
    report = verify_loday(args.n);
  else if (args.identity == "theta")
    report = verify_theta(args.n);
  else if (args.identity == "props")
    report = verify_eulerian_props(args.n);
  else if (args.identity == "shuffle")
    report = verify_shuffle(args.n);
  else
    throw DomainError("unknown identity '" + args.identity + "'");
  emit(report_to_json(report));
  return report.pass ? 0 : 1;
}

int run_qverify(const QVerifyArgs& args) {
  QIdentityPair pair;
  if (args.pair == "aa")
    pair = QIdentityPair::AA;
  else if (args.pair == "bb")
    pair = QIdentityPair::BB;
  else if (args.pair == "augaug")
    pair = QIdentityPair::AugAug;
  else if (args.pair == "augb")
    pair = QIdentityPair::AugB;
  else
    throw DomainError("unknown pair '" + args.pair + "'");
  const auto report = verify_q_identity(args.n, pair, args.k, args.l);
  emit(report_to_json(report));
  return report.pass ? 0 : 1;
}

int run_shuffle(const ShuffleArgs& args) {
  if ((args.a > 0) == (args.m > 0))
    throw DomainError("shuffle needs exactly one of --a or --m");
  if (args.tvd) {
    if (args.m < 1) throw DomainError("--tvd tabulates m = 1..M; give --m M");
    const int decimal = args.decimal >= 0 ? args.decimal : 12;
    const auto uniform = uniform_distribution(args.n);
    if (args.format == "csv") {
      std::cout << "m,tvd_decimal,tvd_exact\n";
      for (int m = 1; m <= args.m; ++m) {
        const Rational t = total_variation(repeated_shuffle(args.n, m), uniform);
        std::cout << m << "," << rational_to_decimal(t, decimal) << ","
                  << rational_to_string(t) << "\n";
      }
    } else {
      Json rows = Json::array();
      for (int m = 1; m <= args.m; ++m) {
        const Rational t = total_variation(repeated_shuffle(args.n, m), uniform);
        Json row;
        row["m"] = m;
        row["tvd"] = rational_to_string(t);
        row["tvd_decimal"] = rational_to_decimal(t, decimal);
        rows.push_back(std::move(row));
      }
      Json out;
      out["n"] = args.n;
      out["rows"] = std::move(rows);
      emit(out);
    }
    return 0;
  }
  const ShuffleDistribution dist =
      args.a > 0 ? a_shuffle_distribution(args.n, args.a) : repeated_shuffle(args.n, args.m);
  if (args.format == "csv")
    std::cout << distribution_to_csv(dist, args.decimal);
  else
    emit(distribution_to_json(dist, args.decimal));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Eulerian descent algebra computations and identity verification"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --force appear after the subcommand

  bool force = false;
  app.add_flag("--force", force, "lift the enumeration rank guardrails");
  std::string format = "json";
  app.add_option("--format", format, "json|csv (csv applies to shuffle output)");

  StatsArgs stats_args;
  auto* stats = app.add_subcommand("stats", "descent statistics of one (signed) permutation");
  stats->add_option("--perm", stats_args.perm, "window, e.g. 1,4,3,2 or -2,1")->required();
  stats->add_flag("--signed", stats_args.is_signed, "treat the window as a signed permutation");

  EulerianArgs eulerian_args;
  auto* eulerian = app.add_subcommand("eulerian", "Eulerian polynomial coefficients");
  eulerian->add_option("--n", eulerian_args.n, "rank")->required();
  eulerian->add_option("--kind", eulerian_args.kind, "a|cyclic|b|aug")->required();

  OrderPolyArgs orderpoly_args;
  auto* orderpoly = app.add_subcommand("orderpoly", "order polynomial oracle / closed form");
  orderpoly->add_option("--poset", orderpoly_args.poset_file, "poset file");
  orderpoly->add_option("--k", orderpoly_args.k, "scale parameter")->required();
  orderpoly->add_option("--flavor", orderpoly_args.flavor, "ordinary|typeb|aug");
  orderpoly->add_flag("--q", orderpoly_args.q, "q-weighted version");
  orderpoly->add_flag("--closed", orderpoly_args.closed, "compare closed form against the oracle");
  orderpoly->add_option("--perm", orderpoly_args.perm, "window for --closed");

  std::string linext_file;
  auto* linext = app.add_subcommand("linext", "linear extensions of a poset file");
  linext->add_option("--poset", linext_file, "poset file")->required();

  ElementArgs element_args;
  auto* element = app.add_subcommand("element", "group algebra elements as JSON");
  element->add_option("--n", element_args.n, "rank")->required();
  element->add_option("--kind", element_args.kind, "a|cyclic|b|aug")->required();
  element->add_option("--eulerian", element_args.eulerian, "index i of E_i");
  element->add_option("--structure", element_args.structure, "evaluate at x (rational, e.g. 3/2)");
  element->add_option("--loday", element_args.loday, "index k of the signed elements");
  element->add_flag("--bar", element_args.bar_variant, "move coefficients to inverses");

  int idem_n = 0;
  std::string idem_kind;
  auto* idempotents = app.add_subcommand("idempotents", "orthogonal idempotent family");
  idempotents->add_option("--n", idem_n, "rank")->required();
  idempotents->add_option("--kind", idem_kind, "a|cyclic|b|aug")->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "verify one identity exhaustively");
  verify->add_option("--n", verify_args.n, "rank")->required();
  verify->add_option("--identity", verify_args.identity,
                     "a|cyclic|b|aug|mixed|loday|theta|props|shuffle")->required();
  verify->add_option("--threads", verify_args.threads, "parallel grid evaluation");

  QVerifyArgs qverify_args;
  auto* qverify = app.add_subcommand("qverify", "verify a q-identity at one (k, l)");
  qverify->add_option("--n", qverify_args.n, "rank")->required();
  qverify->add_option("--pair", qverify_args.pair, "aa|bb|augaug|augb")->required();
  qverify->add_option("--k", qverify_args.k, "left argument")->required();
  qverify->add_option("--l", qverify_args.l, "right argument")->required();

  ShuffleArgs shuffle_args;
  auto* shuffle = app.add_subcommand("shuffle", "riffle shuffle distributions and TVD tables");
  shuffle->add_option("--n", shuffle_args.n, "deck size")->required();
  shuffle->add_option("--a", shuffle_args.a, "packets of a single a-shuffle");
  shuffle->add_option("--m", shuffle_args.m, "number of 2-shuffles");
  shuffle->add_flag("--tvd", shuffle_args.tvd, "distance-to-uniform table for m = 1..M");
  shuffle->add_option("--decimal", shuffle_args.decimal, "extra decimal rendering, P places");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  set_enumeration_force(force);
  shuffle_args.format = format;

  try {
    if (format != "json" && format != "csv") throw DomainError("unknown format '" + format + "'");
    if (format == "csv" && !app.got_subcommand(shuffle))
      throw DomainError("csv output is only available for the shuffle subcommand");
    if (app.got_subcommand(stats)) return run_stats(stats_args);
    if (app.got_subcommand(eulerian)) return run_eulerian(eulerian_args);
    if (app.got_subcommand(orderpoly)) return run_orderpoly(orderpoly_args);
    if (app.got_subcommand(linext)) return run_linext(linext_file);
    if (app.got_subcommand(element)) return run_element(element_args);
    if (app.got_subcommand(idempotents)) return run_idempotents(idem_n, idem_kind);
    if (app.got_subcommand(verify)) return run_verify(verify_args);
    if (app.got_subcommand(qverify)) return run_qverify(qverify_args);
    if (app.got_subcommand(shuffle)) return run_shuffle(shuffle_args);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << std::endl;
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << std::endl;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 2;
}
