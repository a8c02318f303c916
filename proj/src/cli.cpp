#include "expokit/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "expokit/io.hpp"

namespace expokit {

namespace {

struct Options {
  std::string doctrine, input, name, what, yname = "Y", zname = "Z";
  int cap = default_cap();
  bool json = false;
};

Json load_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw invalid_instance(std::string("parse error: ") + e.what());
  }
}

Json pick(const Json& file, const char* section, const std::string& name,
          const char* standalone_key) {
  if (file.is_object() && file.contains(section)) {
    auto& sec = file.at(section);
    require(sec.is_object() && !sec.empty(),
            std::string("'") + section + "' must be a non-empty table");
    if (name.empty()) {
      require(sec.size() == 1, std::string("several entries in '") + section +
                                   "'; pick one with --name");
      return sec.begin().value();
    }
    require(sec.contains(name), "no entry named '" + name + "'");
    return sec.at(name);
  }
  require(file.is_object() && file.contains(standalone_key),
          std::string("input has neither '") + section + "' nor a standalone " +
              standalone_key + " entry");
  return file;
}

ObjectOverB get_over(const Json& file, const Options& o,
                     const std::string& name) {
  auto q = parse_over(pick(file, "objects", name, "total"));
  require(doctrine_name(q.d) == o.doctrine,
          "object doctrine '" + std::string(doctrine_name(q.d)) +
              "' does not match --doctrine " + o.doctrine);
  return q;
}

std::string failure_line(const ExpFailure& f) {
  std::ostringstream os;
  switch (f.kind) {
    case ExpFailure::NotPseudo:
      os << "NotPseudo(" << f.b << "," << f.c << "," << f.e << ")";
      break;
    case ExpFailure::NotDoublyContinuous:
      os << "NotDoublyContinuous(" << f.b << "," << f.c << ")";
      break;
    case ExpFailure::FiberNotExponentiable:
      os << "FiberNotExponentiable(" << f.b << ")";
      break;
  }
  return os.str();
}

void emit_verdict(const Options& o, std::ostream& out, bool holds,
                  const std::vector<std::string>& witnesses,
                  const std::string& what) {
  if (o.json) {
    Json j;
    j["what"] = what;
    j["holds"] = holds;
    j["witnesses"] = witnesses;
    out << j.dump(2) << "\n";
  } else {
    out << what << ": " << (holds ? "holds" : "fails") << "\n";
    for (auto& w : witnesses) out << "  " << w << "\n";
  }
}

int report_exit(const OracleReport& r, const Options& o, std::ostream& out) {
  if (o.json) {
    out << print_report(r).dump(2) << "\n";
  } else {
    if (r.inconclusive)
      out << "inconclusive at cap " << r.cap << "\n";
    else
      out << (r.verdict ? "holds" : "fails") << " (checked " << r.checked
          << " at cap " << r.cap << ")\n";
    if (!r.counterexample.empty()) out << "  " << r.counterexample << "\n";
  }
  if (r.inconclusive) return 3;
  return r.verdict ? 0 : 1;
}

LaxFunctor decompose_any(const ObjectOverB& q) {
  if (q.d == Doctrine::Cat) return benabou_decompose(over_functor(q), q.base);
  return decompose(q);
}

int cmd_decompose(const Json& file, const Options& o, std::ostream& out) {
  out << print_lax(decompose_any(get_over(file, o, o.name))).dump(2) << "\n";
  return 0;
}

int cmd_glue(const Json& file, const Options& o, std::ostream& out) {
  auto f = parse_lax(pick(file, "laxfunctors", o.name, "fibers"));
  require(doctrine_name(f.d) == o.doctrine, "doctrine mismatch");
  if (f.d == Doctrine::Cat)
    out << print_functor(benabou_glue(f)).dump(2) << "\n";
  else
    out << print_over(glue(f)).dump(2) << "\n";
  return 0;
}

int cmd_check(const Json& file, const Options& o, std::ostream& out) {
  auto q = get_over(file, o, o.name);
  auto what = o.what.empty() ? std::string("exp") : o.what;
  if (what == "pseudo") {
    auto r = is_pseudo(decompose_any(q));
    std::vector<std::string> w;
    if (!r.ok)
      w.push_back("comparison not invertible at (" + std::to_string(r.b) +
                  "," + std::to_string(r.c) + "," + std::to_string(r.e) + ")");
    emit_verdict(o, out, r.ok, w, "pseudo");
    return r.ok ? 0 : 1;
  }
  if (what == "exp") {
    auto v = check_exponentiable(decompose_any(q));
    std::vector<std::string> w;
    for (auto& f : v.failures) w.push_back(failure_line(f));
    emit_verdict(o, out, v.decision, w, "exp");
    return v.decision ? 0 : 1;
  }
  if (what == "gc") {
    require(q.d == Doctrine::Cat, "--what gc needs --doctrine cat");
    auto r = giraud_conduche(over_functor(q));
    std::vector<std::string> w;
    if (!r.ok)
      w.push_back("factorizations of morphism " + std::to_string(r.alpha) +
                  " through (" + std::to_string(r.g) + "," +
                  std::to_string(r.h) + ") are not connected");
    emit_verdict(o, out, r.ok, w, "gc");
    return r.ok ? 0 : 1;
  }
  if (what == "dc") {
    require(q.d == Doctrine::Top || q.d == Doctrine::Loc,
            "--what dc needs --doctrine top or loc");
    auto f = decompose(q);
    std::vector<std::string> w;
    for (auto& [bc, v] : f.vert)
      if (!doubly_continuous(std::get<MeetMap>(v)))
        w.push_back("vertical (" + std::to_string(bc.first) + "," +
                    std::to_string(bc.second) + ") not doubly continuous");
    emit_verdict(o, out, w.empty(), w, "dc");
    return w.empty() ? 0 : 1;
  }
  throw invalid_instance("--what must be one of pseudo, exp, gc, dc");
}

int cmd_exp(const Json& file, const Options& o, std::ostream& out,
            std::ostream& err) {
  auto y = get_over(file, o, o.yname);
  auto z = get_over(file, o, o.zname);
  try {
    if (y.d == Doctrine::Cat) {
      auto qy = over_functor(y), qz = over_functor(z);
      auto e = cat_exponential(qy, qz, y.base);
      auto r = verify_adjunction_cat(qy, e, qz, y.base, o.cap);
      Json j;
      j["exponential"] = print_functor(e);
      j["oracle"] = print_report(r);
      out << j.dump(2) << "\n";
      return 0;
    }
    auto e = exponential_over_B(y, z);
    auto r = verify_adjunction(y, e, z, o.cap);
    Json j;
    j["exponential"] = print_over(e);
    j["oracle"] = print_report(r);
    out << j.dump(2) << "\n";
    return 0;
  } catch (const not_exponentiable& e) {
    err << "NotExponentiable: " << e.what() << "\n";
    return 1;
  }
}

int cmd_oracle(const Json& file, const Options& o, std::ostream& out,
               std::ostream& err) {
  auto what = o.what;
  if (what == "pushout") {
    auto q = get_over(file, o, o.name);
    OracleReport agg;
    agg.cap = o.cap;
    bool any = false;
    for (int b = 0; b < q.base.size(); ++b)
      for (int c = 0; c < q.base.size(); ++c)
        for (int e = 0; e < q.base.size(); ++e) {
          if (!(q.base.lt(b, c) && q.base.lt(c, e))) continue;
          any = true;
          auto r = verify_pushout(q, b, c, e, o.cap);
          agg.checked += r.checked;
          if (r.inconclusive) agg.inconclusive = true;
          if (!r.inconclusive && !r.verdict) {
            r.counterexample = "triple (" + std::to_string(b) + "," +
                               std::to_string(c) + "," + std::to_string(e) +
                               "): " + r.counterexample;
            return report_exit(r, o, out);
          }
        }
    if (!any) agg.inconclusive = true;
    agg.verdict = !agg.inconclusive;
    return report_exit(agg, o, out);
  }
  if (what == "adjunction") {
    auto y = get_over(file, o, o.yname);
    auto z = get_over(file, o, o.zname);
    try {
      if (y.d == Doctrine::Cat) {
        auto qy = over_functor(y), qz = over_functor(z);
        auto e = cat_exponential(qy, qz, y.base);
        return report_exit(verify_adjunction_cat(qy, e, qz, y.base, o.cap), o,
                           out);
      }
      auto e = exponential_over_B(y, z);
      return report_exit(verify_adjunction(y, e, z, o.cap), o, out);
    } catch (const not_exponentiable& e) {
      err << "NotExponentiable: " << e.what() << "\n";
      return 1;
    }
  }
  if (what == "quotient") {
    auto q = get_over(file, o, o.name);
    require(flat(q.d), "--what quotient needs a flat doctrine");
    return report_exit(verify_quotient_preservation(q, o.cap), o, out);
  }
  throw invalid_instance("--what must be one of pushout, adjunction, quotient");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"finite-instance exponentiability toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--doctrine", o.doctrine, "cat|pos|top|loc|rel")
        ->required();
    sub->add_option("--input", o.input, "instance file")->required();
    sub->add_option("--name", o.name, "entry to operate on");
    sub->add_flag("--json", o.json, "machine-readable report");
    sub->add_option("--cap", o.cap, "oracle search cap");
    return sub;
  };
  auto* sc_decompose = add_common(app.add_subcommand("decompose"));
  auto* sc_glue = add_common(app.add_subcommand("glue"));
  auto* sc_check = add_common(app.add_subcommand("check"));
  sc_check->add_option("--what", o.what, "pseudo|exp|gc|dc");
  auto* sc_exp = add_common(app.add_subcommand("exp"));
  sc_exp->add_option("--y", o.yname, "exponent name (default Y)");
  sc_exp->add_option("--z", o.zname, "target name (default Z)");
  auto* sc_oracle = add_common(app.add_subcommand("oracle"));
  sc_oracle->add_option("--what", o.what, "pushout|adjunction|quotient")
      ->required();
  sc_oracle->add_option("--y", o.yname, "exponent name (default Y)");
  sc_oracle->add_option("--z", o.zname, "target name (default Z)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    parse_doctrine(o.doctrine);
    auto file = load_file(o.input);
    if (sc_decompose->parsed()) return cmd_decompose(file, o, out);
    if (sc_glue->parsed()) return cmd_glue(file, o, out);
    if (sc_check->parsed()) return cmd_check(file, o, out);
    if (sc_exp->parsed()) return cmd_exp(file, o, out, err);
    if (sc_oracle->parsed()) return cmd_oracle(file, o, out, err);
  } catch (const cap_exceeded& e) {
    err << "inconclusive: " << e.what() << "\n";
    return 3;
  } catch (const invalid_instance& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const verification_failed& e) {
    err << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace expokit
