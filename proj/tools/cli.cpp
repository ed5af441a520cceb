#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "setadf/adf.hpp"
#include "setadf/io.hpp"
#include "setadf/setaf_semantics.hpp"
#include "setadf/signatures.hpp"
#include "setadf/translation.hpp"

namespace setadf::cli {

namespace {

/// Error with a fixed exit code and a short category for the error line.
struct Failure {
  int code;
  std::string category;
  std::string reason;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "io", "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Semantics semantics_arg(const std::string& name, std::initializer_list<Semantics> allowed) {
  auto s = parse_semantics(name);
  if (!s || std::find(allowed.begin(), allowed.end(), *s) == allowed.end()) {
    throw Failure{kUsage, "usage", "semantics '" + name + "' is not supported here"};
  }
  return *s;
}

std::optional<InstanceKind> kind_arg(const std::string& kind) {
  if (kind.empty()) return std::nullopt;
  if (kind == "setaf") return InstanceKind::Setaf;
  if (kind == "adf") return InstanceKind::Adf;
  throw Failure{kUsage, "usage", "unknown kind '" + kind + "'"};
}

InstanceDocument load_instance(const std::string& path, const std::string& kind) {
  return parse_instance(read_file(path), kind_arg(kind), path);
}

/// The ADF view of either kind of instance.
Adf as_adf(const InstanceDocument& doc) {
  if (doc.kind == InstanceKind::Adf) return doc.adf();
  return setaf_to_setadf(doc.setaf()).to_adf();
}

void print_set(std::ostream& out, const LabellingSet& l) {
  for (const auto& lambda : l) out << format_labelling(lambda) << '\n';
}

void print_verdict(std::ostream& out, const SignatureVerdict& v) {
  out << "verdict: " << (v.accepted ? "accepted" : "rejected") << '\n';
  for (const auto& violation : v.violations) {
    out << "violation: " << violation.id << ' ' << violation.name << ": "
        << violation.description << '\n';
    for (const auto& lambda : violation.labellings) {
      out << "  " << format_labelling(lambda) << '\n';
    }
  }
}

struct Options {
  std::string sem;
  std::string input;
  std::string labs;
  std::string kind;
  std::string direction;
  bool json = false;
  bool normalize = false;
  bool verify = false;
  bool convert = false;
};

int cmd_solve(const Options& o, std::ostream& out) {
  auto doc = load_instance(o.input, o.kind);
  Semantics sigma = semantics_arg(o.sem, {Semantics::Cf, Semantics::Adm, Semantics::Com,
                                          Semantics::Grd, Semantics::Prf, Semantics::Stb,
                                          Semantics::Mod});
  LabellingSet result(Domain{});
  if (doc.kind == InstanceKind::Setaf) {
    if (sigma == Semantics::Mod) {
      throw Failure{kUsage, "usage", "semantics 'mod' applies to ADF inputs only"};
    }
    result = enumerate(doc.setaf(), sigma);
  } else {
    result = int_to_lab(enumerate_adf(doc.adf(), sigma));
  }
  if (o.json) {
    out << write_labelling_json(result, std::string(semantics_name(sigma)));
  } else {
    print_set(out, result);
  }
  return kOk;
}

int cmd_translate(const Options& o, std::ostream& out) {
  auto doc = load_instance(o.input, o.kind);
  std::string direction = o.direction;
  if (direction.empty()) direction = doc.kind == InstanceKind::Setaf ? "setaf2adf" : "adf2setaf";
  if (direction == "setaf2adf") {
    if (doc.kind != InstanceKind::Setaf) {
      throw Failure{kUsage, "usage", "setaf2adf needs a SETAF input"};
    }
    SetadfView view = setaf_to_setadf(doc.setaf());
    if (o.normalize) view = prune_to_sfadf(view);
    out << to_text(view.to_adf());
    return kOk;
  }
  if (direction != "adf2setaf") throw Failure{kUsage, "usage", "unknown direction " + direction};
  if (doc.kind != InstanceKind::Adf) {
    throw Failure{kUsage, "usage", "adf2setaf needs an ADF input"};
  }
  const Adf& d = doc.adf();
  for (std::size_t i = 0; i < d.statements().size(); ++i) {
    if (classify(d.condition(i)) == Classification::Unsatisfiable) {
      throw Failure{kUsage, "not-representable",
                    "statement '" + d.statements()[i].str() +
                        "' has an unsatisfiable acceptance condition"};
    }
  }
  std::optional<SetadfView> view;
  if (o.normalize) {
    view = normalize(d);
  } else {
    view = as_setadf(d);
    if (!view) {
      throw Failure{kUsage, "not-representable",
                    "conditions are not in SETADF form; try --normalize"};
    }
  }
  out << to_text(setadf_to_setaf(*view));
  return kOk;
}

int cmd_links(const Options& o, std::ostream& out) {
  Adf d = as_adf(load_instance(o.input, o.kind));
  for (const auto& [b, a] : d.links()) {
    out << b.str() << " -> " << a.str() << " : " << link_type_name(link_type(d, b, a)) << '\n';
  }
  return kOk;
}

int cmd_check_signature(const Options& o, std::ostream& out) {
  Semantics sigma = semantics_arg(
      o.sem, {Semantics::Stb, Semantics::Prf, Semantics::Cf, Semantics::Grd, Semantics::Adm});
  auto doc = read_labelling_json(read_file(o.labs));
  SignatureVerdict v;
  if (sigma == Semantics::Adm) {
    out << "necessary-only: adm acceptance does not establish realizability\n";
    v = check_adm_necessary(doc.labellings);
  } else {
    v = check_signature(doc.labellings, sigma);
  }
  print_verdict(out, v);
  return v.accepted ? kOk : kNegative;
}

int cmd_realize(const Options& o, std::ostream& out, std::ostream& err) {
  Semantics sigma =
      semantics_arg(o.sem, {Semantics::Stb, Semantics::Prf, Semantics::Cf, Semantics::Grd});
  auto doc = read_labelling_json(read_file(o.labs));
  try {
    out << to_text(realize(doc.labellings, sigma, o.verify));
  } catch (const SignatureRejected& e) {
    print_verdict(err, e.verdict());
    return kNegative;
  }
  return kOk;
}

int cmd_delta(const Options& o, std::ostream& out) {
  Semantics sigma = semantics_arg(o.sem, {Semantics::Cf, Semantics::Adm, Semantics::Com,
                                          Semantics::Grd, Semantics::Prf, Semantics::Stb,
                                          Semantics::Mod});
  Adf d = as_adf(load_instance(o.input, o.kind));
  DeltaVerdict v = delta_classify(d, sigma);
  out << "in_delta: " << (v.in_delta ? "true" : "false") << '\n';
  if (v.witness) out << "witness: " << format_labelling(int_to_lab(*v.witness)) << '\n';
  if (v.in_delta) {
    if ((sigma == Semantics::Stb || sigma == Semantics::Mod || sigma == Semantics::Prf) &&
        !delta_shape_check(d, sigma)) {
      throw InternalError("in-delta set violates the single-member shape");
    }
    return kNegative;
  }
  if (o.convert) out << to_text(v.converted->to_adf());
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto doc = load_instance(o.input, o.kind);
  std::optional<Setaf> f;
  if (doc.kind == InstanceKind::Setaf) {
    f = doc.setaf();
  } else if (auto view = as_setadf(doc.adf())) {
    f = setadf_to_setaf(*view);
  } else {
    throw Failure{kUsage, "not-representable", "ADF input is not a SETADF"};
  }
  bool all = true;
  for (Semantics sigma : kSetafSemantics) {
    bool ok = verify_correspondence(*f, sigma);
    all = all && ok;
    out << semantics_name(sigma) << ": " << (ok ? "ok" : "FAILED") << '\n';
  }
  bool grd = grounded_crosscheck(*f);
  all = all && grd;
  out << "grd-fixpoint: " << (grd ? "ok" : "FAILED") << '\n';
  return all ? kOk : kNegative;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semantics, translations and signatures for SETAFs and ADFs", "setadf"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "instance file")->required();
    sub->add_option("--kind", o.kind, "override format detection")
        ->check(CLI::IsMember({"setaf", "adf"}));
  };
  auto add_sem = [&](CLI::App* sub) {
    sub->add_option("--sem", o.sem, "semantics")->required();
  };

  auto* solve = app.add_subcommand("solve", "enumerate the labellings of a semantics");
  add_sem(solve);
  add_input(solve);
  solve->add_flag("--json", o.json, "print a JSON labelling document");

  auto* translate = app.add_subcommand("translate", "convert between SETAF and SETADF");
  add_input(translate);
  translate->add_option("--direction", o.direction)
      ->check(CLI::IsMember({"setaf2adf", "adf2setaf"}));
  translate->add_flag("--normalize", o.normalize, "rewrite conditions to negative CNF first");

  auto* links = app.add_subcommand("links", "classify every link of an ADF");
  add_input(links);

  auto* check = app.add_subcommand("check-signature", "test signature membership");
  add_sem(check);
  check->add_option("--labs", o.labs, "JSON labelling document")->required();

  auto* real = app.add_subcommand("realize", "build a SETAF for a labelling set");
  add_sem(real);
  real->add_option("--labs", o.labs, "JSON labelling document")->required();
  real->add_flag("--verify", o.verify, "re-enumerate the result");

  auto* delta = app.add_subcommand("delta", "SFADF versus SETADF realizability");
  add_sem(delta);
  add_input(delta);
  delta->add_flag("--convert", o.convert, "print the equivalent SETADF when one exists");

  auto* verify = app.add_subcommand("verify-correspondence", "SETAF/SETADF correspondence");
  add_input(verify);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: usage: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(o, out);
    if (translate->parsed()) return cmd_translate(o, out);
    if (links->parsed()) return cmd_links(o, out);
    if (check->parsed()) return cmd_check_signature(o, out);
    if (real->parsed()) return cmd_realize(o, out, err);
    if (delta->parsed()) return cmd_delta(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const Failure& f) {
    err << "error: " << f.category << ": " << f.reason << '\n';
    return f.code;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    return kUsage;
  } catch (const NotRepresentable& e) {
    err << "error: not-representable: " << e.what() << '\n';
    return kUsage;
  } catch (const SizeError& e) {
    err << "error: size: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: precondition: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: input: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalError& e) {
    err << "error: internal: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace setadf::cli
