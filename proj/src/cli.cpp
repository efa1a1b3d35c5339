#include "vinberg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "vinberg/coxeter.hpp"
#include "vinberg/sieve.hpp"
#include "vinberg/symmetry.hpp"
#include "vinberg/vinberg.hpp"

namespace vinberg {

const char* kToolVersion = "0.1.0";

namespace {

using json = nlohmann::ordered_json;

json json_int(const Int& x) {
  if (mpz_sizeinbase(x.get_mpz_t(), 2) <= 52) return json(x.get_si());
  return json(x.get_str());
}

json json_vec(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(json_int(x));
  return a;
}

json json_mat(const IntMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_int(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json json_signature(const Signature& s) {
  return json::array({s.positive, s.negative, s.zero});
}

Int parse_int(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw InputError("not an integer: '" + s + "'");
  }
}

IntVec parse_vector(const std::string& s) {
  IntVec v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::erase_if(item, [](char c) { return c == ' ' || c == '\t'; });
    if (!item.empty()) v.push_back(parse_int(item));
  }
  if (v.empty()) throw InputError("empty vector");
  return v;
}

IntMat parse_gram(const std::string& s) {
  std::vector<IntVec> rows;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, ';'))
    if (!row.empty()) rows.push_back(parse_vector(row));
  if (rows.empty()) throw InputError("empty matrix");
  IntMat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  if (!m.is_symmetric()) throw InputError("matrix is not symmetric");
  return m;
}

std::vector<IntVec> parse_vector_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::vector<IntVec> vectors;
  std::string line;
  while (std::getline(in, line)) {
    std::erase_if(line, [](char c) { return c == '\r'; });
    if (line.empty() || line[0] == '#') continue;
    vectors.push_back(parse_vector(line));
  }
  return vectors;
}

QuadraticLattice lattice_from(const std::string& gram_text, const std::string& form_text) {
  if (!gram_text.empty() && !form_text.empty())
    throw InputError("give either --gram or --form, not both");
  if (!gram_text.empty()) return QuadraticLattice(parse_gram(gram_text));
  if (!form_text.empty())
    return QuadraticLattice::from_form_coefficients(parse_vector(form_text));
  throw InputError("a --gram or --form input is required");
}

std::optional<Rat> env_max_weight() {
  const char* env = std::getenv("VINBERG_MAX_WEIGHT");
  if (!env) return std::nullopt;
  std::string s(env);
  auto slash = s.find('/');
  Int num = parse_int(slash == std::string::npos ? s : s.substr(0, slash));
  Int den = slash == std::string::npos ? Int(1) : parse_int(s.substr(slash + 1));
  if (den <= 0) throw InputError("VINBERG_MAX_WEIGHT denominator must be positive");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

json envelope(const std::string& command, const IntMat& gram) {
  json doc;
  doc["tool"] = "vinberg";
  doc["version"] = kToolVersion;
  doc["command"] = command;
  doc["gram"] = json_mat(gram);
  return doc;
}

std::string weight_string(const Rat& w) {
  return w.get_num().get_str() + "/" + w.get_den().get_str();
}

json root_entry(const QuadraticLattice& lattice, const IntVec& v0, const Root& root) {
  json entry;
  entry["vector"] = json_vec(root.vector());
  entry["norm"] = json_int(root.norm());
  Rat w = root_weight(lattice, v0, root.vector());
  entry["weight_num"] = json_int(w.get_num());
  entry["weight_den"] = json_int(w.get_den());
  return entry;
}

std::string edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::None:
      return "none";
    case EdgeKind::Simple:
      return "simple";
    case EdgeKind::Labeled:
      return "labeled";
    case EdgeKind::Bold:
      return "bold";
    case EdgeKind::Dotted:
      return "dotted";
  }
  return "?";
}

json scheme_json(const CoxeterScheme& scheme) {
  json edges = json::array();
  for (std::size_t i = 0; i < scheme.size(); ++i)
    for (std::size_t j = i + 1; j < scheme.size(); ++j) {
      const EdgeLabel& e = scheme.edge(i, j);
      json entry;
      entry["i"] = i;
      entry["j"] = j;
      entry["kind"] = edge_kind_name(e.kind);
      if (e.kind == EdgeKind::None || e.kind == EdgeKind::Simple || e.kind == EdgeKind::Labeled)
        entry["label"] = e.m;
      else if (e.kind == EdgeKind::Bold)
        entry["label"] = "infinity";
      else {
        Rat w2 = e.weight_squared();
        entry["weight_sq_num"] = json_int(w2.get_num());
        entry["weight_sq_den"] = json_int(w2.get_den());
      }
      edges.push_back(entry);
    }
  json out;
  out["vertices"] = scheme.size();
  out["edges"] = edges;
  return out;
}

// dotted weight printed exactly when rational, else as |g|^2
std::string dotted_label(const EdgeLabel& e) {
  Rat w2 = e.weight_squared();
  Int num_root, den_root;
  if (is_perfect_square(w2.get_num(), &num_root) && is_perfect_square(w2.get_den(), &den_root)) {
    std::string s = "|g|=" + num_root.get_str();
    if (den_root != 1) s += "/" + den_root.get_str();
    return s;
  }
  std::string s = "|g|^2=" + w2.get_num().get_str();
  if (w2.get_den() != 1) s += "/" + w2.get_den().get_str();
  return s;
}

std::string scheme_dot(const CoxeterScheme& scheme) {
  std::ostringstream out;
  out << "graph coxeter {\n";
  for (std::size_t i = 0; i < scheme.size(); ++i)
    out << "  n" << i + 1 << " [label=\"" << i + 1 << "\"];\n";
  for (std::size_t i = 0; i < scheme.size(); ++i)
    for (std::size_t j = i + 1; j < scheme.size(); ++j) {
      const EdgeLabel& e = scheme.edge(i, j);
      if (e.kind == EdgeKind::None) continue;
      out << "  n" << i + 1 << " -- n" << j + 1;
      if (e.kind == EdgeKind::Simple)
        out << ";\n";
      else if (e.kind == EdgeKind::Labeled)
        out << " [label=\"" << e.m << "\"];\n";
      else if (e.kind == EdgeKind::Bold)
        out << " [style=bold, label=\"∞\"];\n";
      else
        out << " [style=dashed, label=\"" << dotted_label(e) << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

std::vector<Root> roots_from_vectors(const QuadraticLattice& lattice,
                                     const std::vector<IntVec>& vectors) {
  std::vector<Root> roots;
  for (const IntVec& v : vectors) roots.emplace_back(lattice, v);
  return roots;
}

json thin_json(const ThinCertificate& cert) {
  json t;
  t["m"] = cert.m;
  t["connected"] = cert.connected;
  t["classification"] = to_string(cert.classification);
  t["finite_volume"] = cert.finite_volume;
  t["signature"] = json_signature(cert.gram_signature);
  t["verdict"] = cert.thin ? "thin" : "not-thin";
  if (!cert.thin) t["reason"] = cert.reason;
  return t;
}

struct CommonInput {
  std::string gram_text;
  std::string form_text;
};

void add_form_options(CLI::App* cmd, CommonInput& common) {
  cmd->add_option("--gram", common.gram_text,
                  "Gram matrix: semicolon-separated rows of comma-separated integers");
  cmd->add_option("--form", common.form_text,
                  "quadratic form coefficients c00,c01,..,c11,.. (cross terms even)");
}

int run_dispatch(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Exact-arithmetic toolkit for Lorentzian lattices: root enumeration, "
               "Coxeter schemes, thinness and no-roots certificates"};
  app.require_subcommand(1);

  CommonInput common;
  std::string seed_file, roots_file, pairs_file, basepoint_text;
  std::size_t count = 0;
  std::string max_weight_text;
  bool terminate = false, dot = false, allow_scaling = false;
  long box = 1000, search_radius = 10000, witness_radius = 60;

  auto* sig = app.add_subcommand("signature", "signature of a Lorentzian Gram matrix");
  add_form_options(sig, common);

  auto* inv = app.add_subcommand("invariants", "Smith invariant factors");
  add_form_options(inv, common);

  auto* roots = app.add_subcommand("roots", "run the root enumeration");
  add_form_options(roots, common);
  roots->add_option("--seed-roots", seed_file, "file of seed roots, one vector per line");
  roots->add_option("--count", count, "stop after this many accepted roots");
  roots->add_option("--max-weight", max_weight_text, "stop at this weight (N or N/D)");
  roots->add_flag("--terminate", terminate, "stop when the polyhedron has finite volume");
  roots->add_option("--basepoint", basepoint_text, "override the basepoint vector");

  auto* scheme = app.add_subcommand("scheme", "Coxeter scheme of given roots");
  add_form_options(scheme, common);
  scheme->add_option("--roots-file", roots_file, "file of roots, one vector per line")
      ->required();
  scheme->add_flag("--dot", dot, "emit a DOT graph instead of JSON");

  auto* thin = app.add_subcommand("thin-check", "thinness certificate");
  add_form_options(thin, common);
  thin->add_option("--seed-roots", seed_file, "file of seed roots");
  thin->add_option("--roots-file", roots_file, "certify exactly these roots");
  thin->add_option("--count", count, "enumerate this many roots before certifying");
  thin->add_option("--basepoint", basepoint_text, "override the basepoint vector");

  auto* noroots = app.add_subcommand("no-roots", "certify that a lattice has no roots");
  add_form_options(noroots, common);
  noroots->add_option("--search-radius", search_radius, "bounded root search radius");
  noroots->add_option("--witness-radius", witness_radius, "integral witness box");

  auto* reflect = app.add_subcommand("reflect", "reflection matrices of given roots");
  add_form_options(reflect, common);
  reflect->add_option("--roots-file", roots_file, "file of roots")->required();

  auto* symmetry = app.add_subcommand("symmetry", "isometries extending a root pairing");
  add_form_options(symmetry, common);
  symmetry->add_option("--pairs", pairs_file, "file of lines 'a1,a2,.. -> b1,b2,..'")
      ->required();
  symmetry->add_flag("--allow-scaling", allow_scaling,
                     "search form similitudes when norms differ by an integer ratio");
  symmetry->add_option("--box", box, "sweep bound for residual degrees of freedom");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    throw InputError(std::string("argument error: ") + e.what());
  }

  if (sig->parsed()) {
    IntMat gram = common.gram_text.empty()
                      ? QuadraticLattice::from_form_coefficients(parse_vector(common.form_text)).gram()
                      : parse_gram(common.gram_text);
    Signature s = signature(gram);
    json doc = envelope("signature", gram);
    doc["signature"] = json_signature(s);
    if (s.negative != 1 || s.zero != 0) {
      doc["error"] = "not Lorentzian: signature is (" + std::to_string(s.positive) + "," +
                     std::to_string(s.negative) + "," + std::to_string(s.zero) +
                     "), expected (d,1,0)";
      out << doc.dump(2) << "\n";
      return 1;
    }
    out << doc.dump(2) << "\n";
    return 0;
  }

  if (inv->parsed()) {
    IntMat gram = common.gram_text.empty()
                      ? QuadraticLattice::from_form_coefficients(parse_vector(common.form_text)).gram()
                      : parse_gram(common.gram_text);
    json doc = envelope("invariants", gram);
    json factors = json::array();
    for (const Int& f : invariant_factors(gram)) factors.push_back(json_int(f));
    doc["invariant_factors"] = factors;
    out << doc.dump(2) << "\n";
    return 0;
  }

  if (roots->parsed()) {
    QuadraticLattice lattice = lattice_from(common.gram_text, common.form_text);
    RunOptions opts;
    if (!seed_file.empty()) opts.seeds = parse_vector_file(seed_file);
    if (!basepoint_text.empty()) opts.basepoint = parse_vector(basepoint_text);
    opts.max_weight = env_max_weight();
    StopCriterion stop;
    if (terminate)
      stop = StopCriterion::volume_stop();
    else if (!max_weight_text.empty()) {
      auto slash = max_weight_text.find('/');
      Int num = parse_int(slash == std::string::npos ? max_weight_text
                                                     : max_weight_text.substr(0, slash));
      Int den = slash == std::string::npos ? Int(1) : parse_int(max_weight_text.substr(slash + 1));
      Rat w(num, den);
      w.canonicalize();
      stop = StopCriterion::weight_stop(w);
    } else if (roots->count("--count"))
      stop = StopCriterion::count_stop(count);
    else
      throw InputError("one of --count, --max-weight, --terminate is required");
    RunResult result = run(lattice, stop, opts);
    json doc = envelope("roots", lattice.gram());
    doc["config"]["basepoint"] = json_vec(result.state.basepoint());
    doc["config"]["candidate_norms"] = [&] {
      json a = json::array();
      for (const Int& k : result.state.candidate_norms()) a.push_back(json_int(k));
      return a;
    }();
    if (opts.max_weight) doc["config"]["max_weight"] = weight_string(*opts.max_weight);
    json list = json::array();
    for (const Root& r : result.state.accepted())
      list.push_back(root_entry(lattice, result.state.basepoint(), r));
    doc["roots"] = list;
    if (terminate) doc["reflective"] = result.reflective;
    out << doc.dump(2) << "\n";
    return 0;
  }

  if (scheme->parsed()) {
    QuadraticLattice lattice = lattice_from(common.gram_text, common.form_text);
    std::vector<Root> rts = roots_from_vectors(lattice, parse_vector_file(roots_file));
    CoxeterScheme sch = build_scheme(lattice, rts);
    if (dot) {
      out << scheme_dot(sch);
      return 0;
    }
    json doc = envelope("scheme", lattice.gram());
    doc["scheme"] = scheme_json(sch);
    out << doc.dump(2) << "\n";
    return 0;
  }

  if (thin->parsed()) {
    QuadraticLattice lattice = lattice_from(common.gram_text, common.form_text);
    std::vector<Root> rts;
    json config;
    if (!roots_file.empty()) {
      rts = roots_from_vectors(lattice, parse_vector_file(roots_file));
    } else {
      if (!thin->count("--count")) throw InputError("--count or --roots-file is required");
      RunOptions opts;
      if (!seed_file.empty()) opts.seeds = parse_vector_file(seed_file);
      if (!basepoint_text.empty()) opts.basepoint = parse_vector(basepoint_text);
      opts.max_weight = env_max_weight();
      RunResult result = run(lattice, StopCriterion::count_stop(count), opts);
      rts = result.state.accepted();
      config["basepoint"] = json_vec(result.state.basepoint());
      if (opts.max_weight) config["max_weight"] = weight_string(*opts.max_weight);
    }
    ThinCertificate cert = thin_certificate(lattice, rts);
    json doc = envelope("thin-check", lattice.gram());
    if (!config.is_null()) doc["config"] = config;
    doc["thin"] = thin_json(cert);
    out << doc.dump(2) << "\n";
    return 0;
  }

  if (noroots->parsed()) {
    QuadraticLattice lattice = lattice_from(common.gram_text, common.form_text);
    SieveOptions opts;
    opts.search_radius = Int(search_radius);
    opts.witness_radius = Int(witness_radius);
    NoRootsCertificate cert = certify_no_roots(lattice, opts);
    json doc = envelope("no-roots", lattice.gram());
    doc["config"]["search_radius"] = search_radius;
    doc["config"]["witness_radius"] = witness_radius;
    doc["config"]["lift_width_cap"] = opts.width_cap;
    json norms = json::array();
    for (const NormOutcome& e : cert.entries) {
      json entry;
      entry["k"] = json_int(e.k);
      entry["outcome"] = to_string(e.kind);
      if (e.kind == NormOutcomeKind::EliminatedLocally ||
          e.kind == NormOutcomeKind::EliminatedByReduction) {
        entry["modulus"] = json_int(e.modulus);
        entry["target"] = json_int(e.target);
      }
      if (e.sublattice) {
        entry["sublattice_basis"] = json_mat(e.sublattice->basis);
        entry["content"] = json_int(e.sublattice->content);
        json q = json::array();
        for (std::size_t i = 0; i < e.sublattice->reduced.vars(); ++i)
          for (std::size_t j = i; j < e.sublattice->reduced.vars(); ++j)
            q.push_back(json::array({i, j, json_int(e.sublattice->reduced.coeff(i, j))}));
        entry["reduced_form"] = q;
      }
      if (e.kind == NormOutcomeKind::RootFound) entry["root"] = json_vec(e.root);
      norms.push_back(entry);
    }
    doc["no_roots"]["norms"] = norms;
    switch (cert.verdict) {
      case NoRootsCertificate::Verdict::NoRoots:
        doc["no_roots"]["verdict"] = "no-roots";
        break;
      case NoRootsCertificate::Verdict::RootFound:
        doc["no_roots"]["verdict"] = "root-found";
        doc["no_roots"]["root"] = json_vec(cert.root);
        break;
      case NoRootsCertificate::Verdict::Inconclusive: {
        doc["no_roots"]["verdict"] = "inconclusive";
        json inc = json::array();
        for (const Int& k : cert.inconclusive) inc.push_back(json_int(k));
        doc["no_roots"]["inconclusive_norms"] = inc;
        break;
      }
    }
    out << doc.dump(2) << "\n";
    return cert.verdict == NoRootsCertificate::Verdict::Inconclusive ? 2 : 0;
  }

  if (reflect->parsed()) {
    QuadraticLattice lattice = lattice_from(common.gram_text, common.form_text);
    json doc = envelope("reflect", lattice.gram());
    json list = json::array();
    for (const IntVec& v : parse_vector_file(roots_file)) {
      Root root(lattice, v);
      LatticeIsometry r = reflection_matrix(lattice, root);
      json entry;
      entry["root"] = json_vec(v);
      entry["matrix"] = json_mat(r.matrix());
      list.push_back(entry);
    }
    doc["reflections"] = list;
    out << doc.dump(2) << "\n";
    return 0;
  }

  if (symmetry->parsed()) {
    QuadraticLattice lattice = lattice_from(common.gram_text, common.form_text);
    std::vector<std::pair<Root, Root>> pairs;
    std::ifstream in(pairs_file);
    if (!in) throw InputError("cannot open file: " + pairs_file);
    std::string line;
    while (std::getline(in, line)) {
      std::erase_if(line, [](char c) { return c == '\r'; });
      if (line.empty() || line[0] == '#') continue;
      auto arrow = line.find("->");
      if (arrow == std::string::npos) throw InputError("pair line needs '->': " + line);
      pairs.emplace_back(Root(lattice, parse_vector(line.substr(0, arrow))),
                         Root(lattice, parse_vector(line.substr(arrow + 2))));
    }
    SymmetryOptions opts;
    opts.box = Int(box);
    json doc = envelope("symmetry", lattice.gram());
    doc["config"]["box"] = box;
    doc["config"]["allow_scaling"] = allow_scaling;
    json list = json::array();
    if (allow_scaling) {
      for (const Similitude& s : extend_pairing_similitude(lattice, pairs, opts)) {
        SimilitudeOrder ord = similitude_order(lattice, s);
        json entry;
        entry["matrix"] = json_mat(s.matrix);
        entry["multiplier"] = json_int(s.multiplier);
        entry["matrix_order"] = ord.matrix_finite ? json(ord.matrix_order) : json("infinite");
        entry["projective_order"] =
            ord.projective_finite ? json(ord.projective_order) : json("infinite");
        list.push_back(entry);
      }
    } else {
      for (const LatticeIsometry& u : extend_pairing(lattice, pairs, opts)) {
        OrderClass ord = order_class(lattice, u);
        json entry;
        entry["matrix"] = json_mat(u.matrix());
        entry["order"] = ord.finite ? json(ord.order) : json("infinite");
        list.push_back(entry);
      }
    }
    doc["symmetry"] = list;
    out << doc.dump(2) << "\n";
    return 0;
  }

  throw InputError("no subcommand given");
}

}  // namespace

CliResult dispatch(const std::vector<std::string>& args) {
  std::ostringstream out;
  int code = 0;
  try {
    code = run_dispatch(args, out);
  } catch (const BudgetExceededError& e) {
    json doc;
    doc["tool"] = "vinberg";
    doc["version"] = kToolVersion;
    doc["error"] = e.what();
    out.str("");
    out << doc.dump(2) << "\n";
    code = 2;
  } catch (const Error& e) {
    json doc;
    doc["tool"] = "vinberg";
    doc["version"] = kToolVersion;
    doc["error"] = e.what();
    out.str("");
    out << doc.dump(2) << "\n";
    code = 1;
  }
  return {code, out.str()};
}

}  // namespace vinberg
