#include "wqg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wqg/bialgebroid.hpp"
#include "wqg/duality.hpp"
#include "wqg/errors.hpp"
#include "wqg/frobenius.hpp"
#include "wqg/hopf.hpp"
#include "wqg/io.hpp"
#include "wqg/repcat.hpp"
#include "wqg/weak.hpp"
#include "wqg/zoo.hpp"

namespace wqg {

namespace {

using json = nlohmann::ordered_json;

/// Usage-level failure (exit 2) raised by the command handlers.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool color;
  std::string output = "-";
  std::string report_path;
  CheckOptions opts;

  std::string read(const std::string& path) const {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  Structure load(const std::string& path) const { return parse_structure(read(path)); }

  void write(const std::string& text) const {
    if (output == "-") {
      out << text;
      return;
    }
    std::ofstream f(output, std::ios::binary);
    if (!f) throw UsageError("cannot write " + output);
    f << text;
  }
  void emit(const Structure& s) const { write(serialize_structure(s)); }
  void emit(const json& j) const { write(canonical_json(j.dump())); }

  std::string paint(const std::string& s, bool ok) const {
    if (!color) return s;
    return std::string(ok ? "\033[32m" : "\033[31m") + s + "\033[0m";
  }
};

template <class T>
const T& expect(const Structure& s, const std::string& what) {
  if (!std::holds_alternative<T>(s.value)) throw UsageError("expected " + what + ", got " + s.kind());
  return std::get<T>(s.value);
}

json vec_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

json mat_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

json subspace_json(const Subspace& s) {
  json b = json::array();
  for (const auto& v : s.basis()) b.push_back(vec_json(v));
  json out;
  out["dim"] = s.dim();
  out["basis"] = std::move(b);
  return out;
}

Vector parse_vector(FieldSpec f, const std::string& text, std::size_t n) {
  Vector v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(Scalar::parse(f, part));
  if (v.size() != n) {
    throw DimensionMismatch("expected " + std::to_string(n) + " coordinates, got " + std::to_string(v.size()));
  }
  return v;
}

CheckReport check_structure(const Structure& s, const CheckOptions& opts) {
  return std::visit(
      [&](const auto& v) -> CheckReport {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FinDimAlgebra>) {
          return check_algebra(v, opts);
        } else if constexpr (std::is_same_v<T, FinDimCoalgebra>) {
          return check_coalgebra(v, opts);
        } else if constexpr (std::is_same_v<T, WeakBialgebra>) {
          CheckReport r = check_weak_bialgebra(v, opts);
          if (r.overall()) {
            r.append(verify_counital_identities(v, opts), "counital.");
            r.append(antiiso_check(v, opts), "antiiso.");
            if (v.antipode) r.append(verify_antipode(v, *v.antipode, opts), "antipode.");
          }
          return r;
        } else if constexpr (std::is_same_v<T, FrobeniusSystem>) {
          return verify_ifs(v, opts);
        } else if constexpr (std::is_same_v<T, FsBialgebroid>) {
          return check_bialgebroid(v, opts);
        } else if constexpr (std::is_same_v<T, FiniteGroupoid>) {
          return check_groupoid(v, opts);
        } else if constexpr (std::is_same_v<T, CoalgComodule>) {
          CheckReport r = check_weak_bialgebra(v.h, opts);
          r.append(comodule_check(v, opts), "comodule.");
          return r;
        } else {
          throw UsageError("a pairing is checked with `pair <A> <B> --tau <file>`");
        }
      },
      s.value);
}

int finish_report(const Io& io, const CheckReport& r) {
  std::ostringstream text;
  for (const auto& it : r.items) {
    text << io.paint(it.passed ? "PASS" : "FAIL", it.passed) << "  " << it.id << "  (" << it.cases << " cases)\n";
    for (const auto& w : it.witnesses) {
      text << "      at [";
      for (std::size_t k = 0; k < w.indices.size(); ++k) text << (k ? ", " : "") << w.indices[k];
      text << "]";
      if (!w.discrepancy.empty()) text << " difference " << to_string(w.discrepancy);
      if (!w.note.empty()) text << "  " << w.note;
      text << "\n";
    }
  }
  text << "overall: " << io.paint(r.overall() ? "PASS" : "FAIL", r.overall()) << "\n";
  io.write(text.str());
  if (!io.report_path.empty()) {
    std::ofstream f(io.report_path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + io.report_path);
    f << report_to_json(r);
  }
  return r.overall() ? 0 : 1;
}

int cmd_check(const Io& io, const std::string& path) { return finish_report(io, check_structure(io.load(path), io.opts)); }

int cmd_analyze(const Io& io, const std::string& path) {
  Structure s = io.load(path);
  json j;
  j["kind"] = s.kind();
  CheckReport r = check_structure(s, io.opts);
  j["axioms"] = r.overall();
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, WeakBialgebra>) {
          j["field"] = v.field().to_string();
          j["dim"] = v.dim();
          j["commutative"] = v.algebra.is_commutative();
          j["cocommutative"] = variant_unchecked(v, Variant::cop).coalgebra == v.coalgebra;
          j["delta-one"] = vec_json(delta_one(v));
          if (!r.overall()) return;
          CounitalData cd = counital_data(v);
          j["H_s"] = subspace_json(cd.H_s);
          j["H_t"] = subspace_json(cd.H_t);
          json ifs;
          ifs["phi"] = vec_json(cd.ifs_t.phi);
          ifs["e"] = mat_json(cd.ifs_t.e);
          ifs["verified"] = verify_ifs(cd.ifs_t).overall();
          j["target-ifs"] = std::move(ifs);
          BetaData b = beta_map(v);
          json beta;
          beta["domain"] = b.domain.dim();
          beta["codomain"] = b.codomain.dim();
          beta["rank"] = b.rank;
          beta["bijective"] = b.bijective;
          j["beta"] = std::move(beta);
        } else if constexpr (std::is_same_v<T, FsBialgebroid>) {
          j["field"] = v.field().to_string();
          j["dim"] = v.dim();
          j["base-dim"] = v.base_dim();
          j["base-ifs"] = verify_ifs(v.base).overall();
          if (!r.overall()) return;
          CanonicalMapData c = tak_canonical_map(v);
          json can;
          can["domain"] = c.domain_dim;
          can["codomain"] = c.codomain_dim;
          can["rank"] = c.rank;
          can["bijective"] = c.bijective;
          j["canonical-map"] = std::move(can);
        } else if constexpr (std::is_same_v<T, FrobeniusSystem>) {
          j["field"] = v.field().to_string();
          j["dim"] = v.dim();
          SymmetryFlags fl = symmetry_flags(v);
          j["theta-identity"] = fl.theta_identity;
          j["e-flip-invariant"] = fl.e_flip_invariant;
          j["phi-symmetric"] = fl.phi_symmetric;
          j["frobenius-automorphism"] = mat_json(frobenius_automorphism(v));
        } else if constexpr (std::is_same_v<T, FinDimAlgebra> || std::is_same_v<T, FinDimCoalgebra>) {
          j["field"] = v.field().to_string();
          j["dim"] = v.dim();
          if constexpr (std::is_same_v<T, FinDimAlgebra>) j["commutative"] = v.is_commutative();
        } else if constexpr (std::is_same_v<T, FiniteGroupoid>) {
          j["objects"] = v.objects;
          j["arrows"] = v.arrows.size();
        } else if constexpr (std::is_same_v<T, CoalgComodule>) {
          j["field"] = v.h.field().to_string();
          j["dim"] = v.dim;
          j["over-dim"] = v.h.dim();
        }
      },
      s.value);
  io.emit(j);
  return 0;
}

int cmd_antipode(const Io& io, const std::string& path) {
  Structure s = io.load(path);
  WeakBialgebra h = expect<WeakBialgebra>(s, "a weak-bialgebra");
  auto res = solve_antipode(h);
  if (const auto* nh = std::get_if<NotHopf>(&res)) {
    json j;
    j["hopf"] = false;
    j["domain"] = nh->domain_dim;
    j["codomain"] = nh->codomain_dim;
    j["rank"] = nh->rank;
    io.emit(j);
    io.err << "NotHopf: beta has rank " << nh->rank << " of " << nh->codomain_dim << "\n";
    return 1;
  }
  h.antipode = std::get<Matrix>(res);
  io.emit(Structure{h, {}, {}});
  return 0;
}

int cmd_dual(const Io& io, const std::string& path) {
  Structure s = io.load(path);
  if (auto* h = std::get_if<WeakBialgebra>(&s.value)) {
    io.emit(Structure{dual_weak_bialgebra(*h), {}, {}});
  } else if (auto* a = std::get_if<FinDimAlgebra>(&s.value)) {
    io.emit(Structure{dual_coalgebra(*a), {}, {}});
  } else if (auto* c = std::get_if<FinDimCoalgebra>(&s.value)) {
    io.emit(Structure{dual_algebra(*c), {}, {}});
  } else {
    throw UsageError("dual expects a weak-bialgebra, algebra or coalgebra, got " + s.kind());
  }
  return 0;
}

int cmd_to_bialgebroid(const Io& io, const std::string& path) {
  const WeakBialgebra h = expect<WeakBialgebra>(io.load(path), "a weak-bialgebra");
  FsBialgebroid l = weak_to_bialgebroid(h);
  l.basis_names = h.basis_names;
  io.emit(Structure{std::move(l), {}, {}});
  return 0;
}

int cmd_from_bialgebroid(const Io& io, const std::string& path, const std::string& ifs) {
  Structure s = io.load(path);
  const auto& l = expect<FsBialgebroid>(s, "a bialgebroid");
  FrobeniusSystem sys = ifs == "canonical" ? l.base : expect<FrobeniusSystem>(io.load(ifs), "a frobenius-system");
  if (sys.field() != l.field()) throw FieldMismatch("IFS and bialgebroid are over different fields");
  if (!(sys.algebra == l.base.algebra)) throw DimensionMismatch("the IFS lives on a different base algebra");
  WeakBialgebra h = bialgebroid_to_weak(l, sys);
  h.basis_names = l.basis_names;
  io.emit(Structure{std::move(h), {}, {}});
  return 0;
}

int cmd_twist(const Io& io, const std::string& path, const std::string& t) {
  Structure s = io.load(path);
  if (auto* h = std::get_if<WeakBialgebra>(&s.value)) {
    io.emit(Structure{twist_weak(*h, parse_vector(h->field(), t, h->dim())), {}, {}});
  } else if (auto* fs = std::get_if<FrobeniusSystem>(&s.value)) {
    io.emit(Structure{twist_frobenius_system(*fs, parse_vector(fs->field(), t, fs->dim())), s.basis_names, {}});
  } else {
    throw UsageError("twist expects a weak-bialgebra or frobenius-system, got " + s.kind());
  }
  return 0;
}

int cmd_pair(const Io& io, const std::string& a, const std::string& b, const std::string& tau_path) {
  Structure sa = io.load(a), sb = io.load(b);
  const Matrix tau = expect<PairingMatrix>(io.load(tau_path), "a pairing").tau;
  if (auto* la = std::get_if<WeakBialgebra>(&sa.value)) {
    const auto& hb = expect<WeakBialgebra>(sb, "a weak-bialgebra");
    if (la->field() != hb.field() || tau.field() != hb.field()) throw FieldMismatch("pairing inputs differ in field");
    if (tau.rows() != la->dim() || tau.cols() != hb.dim()) throw DimensionMismatch("tau must be dim(A) x dim(B)");
    return finish_report(io, check_weak_skew_pairing(WeakPairing{*la, hb, tau}, io.opts));
  }
  if (auto* la = std::get_if<FsBialgebroid>(&sa.value)) {
    const auto& lb = expect<FsBialgebroid>(sb, "a bialgebroid");
    if (la->field() != lb.field() || tau.field() != lb.field()) throw FieldMismatch("pairing inputs differ in field");
    if (tau.rows() != la->dim() * lb.dim() || tau.cols() != lb.base_dim()) {
      throw DimensionMismatch("tau must be (dim(A) dim(B)) x dim(R)");
    }
    return finish_report(io, check_bialgebroid_skew_pairing(BialgebroidPairing{*la, lb, tau}, io.opts));
  }
  throw UsageError("pair expects weak-bialgebra or bialgebroid files, got " + sa.kind());
}

std::vector<std::vector<std::size_t>> parse_table(const std::string& text) {
  std::vector<std::vector<std::size_t>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<std::size_t> r;
    std::stringstream rs(row);
    std::string x;
    while (std::getline(rs, x, ',')) {
      try {
        std::size_t used = 0;
        r.push_back(std::stoul(x, &used));
        if (x.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(x);
      } catch (const std::logic_error&) {
        throw UsageError("bad table entry '" + x + "'");
      }
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err, bool color) {
  Io io{in, out, err, color, "-", "", {}};
  CLI::App app{"Exact computations with weak bialgebras, weak Hopf algebras and bialgebroids", "wqg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--output", io.output, "Output path, - for stdout");
  app.add_option("--report", io.report_path, "Write the full check report as JSON");
  app.add_flag("--all-witnesses", io.opts.all_witnesses, "Record every failing case");

  std::string file, file_b, ifs = "canonical", tvec, tau, field = "Q", table;
  std::size_t objects = 2, order = 2, split = 2;
  bool function = false, as_groupoid = false;
  int code = 0;

  auto* check = app.add_subcommand("check", "Run the axiom suites for the file's kind");
  check->add_option("file", file, "Structure file or -")->required();
  check->callback([&] { code = cmd_check(io, file); });

  auto* analyze = app.add_subcommand("analyze", "Counital data, target IFS, dimensions");
  analyze->add_option("file", file)->required();
  analyze->callback([&] { code = cmd_analyze(io, file); });

  auto* antipode = app.add_subcommand("antipode", "Solve for the antipode through beta");
  antipode->add_option("file", file)->required();
  antipode->callback([&] { code = cmd_antipode(io, file); });

  auto* dual = app.add_subcommand("dual", "Dual structure");
  dual->add_option("file", file)->required();
  dual->callback([&] { code = cmd_dual(io, file); });

  auto* to_b = app.add_subcommand("to-bialgebroid", "Bialgebroid over the target subalgebra");
  to_b->add_option("file", file)->required();
  to_b->callback([&] { code = cmd_to_bialgebroid(io, file); });

  auto* from_b = app.add_subcommand("from-bialgebroid", "Weak bialgebra from a bialgebroid and an IFS");
  from_b->add_option("file", file)->required();
  from_b->add_option("--ifs", ifs, "frobenius-system file, or canonical for the stored base system");
  from_b->callback([&] { code = cmd_from_bialgebroid(io, file, ifs); });

  auto* twist = app.add_subcommand("twist", "Twist by an invertible element t");
  twist->add_option("file", file)->required();
  twist->add_option("--t", tvec, "Comma separated coordinates of t")->required();
  twist->callback([&] { code = cmd_twist(io, file, tvec); });

  auto* pair = app.add_subcommand("pair", "Check a skew pairing between two structures");
  pair->add_option("a", file)->required();
  pair->add_option("b", file_b)->required();
  pair->add_option("--tau", tau, "pairing file")->required();
  pair->callback([&] { code = cmd_pair(io, file, file_b, tau); });

  auto* gen = app.add_subcommand("gen", "Generate a fixture");
  gen->require_subcommand(1);
  auto field_opt = [&](CLI::App* c) { c->add_option("--field", field, "Q or F_p")->capture_default_str(); };
  auto field_spec = [&] { return FieldSpec::parse(field); };

  auto* g_pg = gen->add_subcommand("pair-groupoid", "Pair groupoid algebra");
  g_pg->add_option("--objects", objects)->check(CLI::Range(std::size_t{1}, std::size_t{12}));
  g_pg->add_flag("--function", function, "Function algebra instead of the groupoid algebra");
  g_pg->add_flag("--groupoid", as_groupoid, "Emit the groupoid itself");
  field_opt(g_pg);
  g_pg->callback([&] {
    FiniteGroupoid g = pair_groupoid(objects);
    if (as_groupoid) {
      io.emit(Structure{g, {}, {}});
    } else {
      io.emit(Structure{function ? groupoid_function_algebra(g, field_spec()) : groupoid_algebra(g, field_spec()), {}, {}});
    }
  });

  auto* g_group = gen->add_subcommand("group", "Cyclic group algebra");
  g_group->add_option("--order", order)->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  g_group->add_flag("--function", function, "Function algebra instead of the group algebra");
  g_group->add_flag("--groupoid", as_groupoid, "Emit the group as a one-object groupoid");
  field_opt(g_group);
  g_group->callback([&] {
    FiniteGroupoid g = cyclic_group(order);
    if (as_groupoid) {
      io.emit(Structure{g, {}, {}});
    } else {
      io.emit(Structure{function ? groupoid_function_algebra(g, field_spec()) : groupoid_algebra(g, field_spec()), {}, {}});
    }
  });

  auto* g_monoid = gen->add_subcommand("monoid", "Monoid bialgebra from a multiplication table");
  g_monoid->add_option("--table", table, "Rows separated by ';', entries by ','")->required();
  field_opt(g_monoid);
  g_monoid->callback([&] { io.emit(Structure{monoid_bialgebra(parse_table(table), field_spec()), {}, {}}); });

  auto* g_env = gen->add_subcommand("enveloping", "Enveloping bialgebroid of a split base");
  g_env->add_option("--split", split, "Base k^m")->check(CLI::Range(std::size_t{1}, std::size_t{6}));
  field_opt(g_env);
  g_env->callback([&] {
    FrobeniusSystem s = trace_ifs_commutative(split_algebra(field_spec(), split));
    io.emit(Structure{enveloping_bialgebroid(s), {}, {}});
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const SchemaError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const FieldMismatch& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  return code;
}

}  // namespace wqg
