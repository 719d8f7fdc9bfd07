#include "etaforms/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "etaforms/bqf.hpp"
#include "etaforms/formulas.hpp"
#include "etaforms/hecke.hpp"
#include "etaforms/verify.hpp"

namespace etaforms::cli {

namespace {

int parse_int(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != s.size() || v < INT32_MIN || v > INT32_MAX) {
    throw std::invalid_argument("bad integer '" + s + "' in " + what);
  }
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string coeff_list(const QSeries& s) {
  std::string out;
  for (int i = 0; i <= s.order(); ++i) {
    if (i) out += ' ';
    out += s[i].to_string();
  }
  return out;
}

struct Context {
  std::ostream& out;
  std::string format;
  bool records() const { return format == "records"; }
};

void emit_series(Context& ctx, const std::string& kind, const std::string& input, const QSeries& s) {
  if (ctx.records()) {
    ctx.out << "kind=" << kind << "\ninput=" << input << "\norder=" << s.order() << "\nfield=" << field_name(s.field())
            << "\ncoeffs=" << coeff_list(s) << "\n\n";
  } else {
    ctx.out << input << " = " << s.to_string() << '\n';
  }
}

std::string genus_string(const std::vector<int>& g) {
  std::string s;
  for (int x : g) s += x > 0 ? '+' : '-';
  return s;
}

}  // namespace

EtaQuotientSpec parse_eta_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("eta spec '" + text + "' needs the form J:S^R,...");
  const int j = parse_int(text.substr(0, colon), "eta prefactor");
  std::vector<EtaFactor> factors;
  for (const auto& item : split(text.substr(colon + 1), ',')) {
    const auto caret = item.find('^');
    const int scale = parse_int(item.substr(0, caret), "eta scale");
    const int power = caret == std::string::npos ? 1 : parse_int(item.substr(caret + 1), "eta power");
    factors.push_back({scale, power});
  }
  if (factors.empty()) throw std::invalid_argument("eta spec '" + text + "' has no factors");
  EtaQuotientSpec spec = EtaQuotientSpec::merged(j, factors);
  for (const auto& f : factors) {
    if (f.scale < 1) throw std::invalid_argument("eta scale must be positive in '" + text + "'");
  }
  return spec;
}

Form parse_form(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw std::invalid_argument("form '" + text + "' must be a,b,c");
  const Form F{parse_int(parts[0], "form"), parse_int(parts[1], "form"), parse_int(parts[2], "form")};
  if (!F.positive_definite()) throw std::invalid_argument("form " + F.to_string() + " is not positive definite");
  return F;
}

FieldElement formula_coefficient(int level, i64 n) {
  require_level(level);
  if (n < 1) throw std::invalid_argument("--n must be positive");
  switch (level) {
    case 47: return FieldElement(FieldLabel::Rational, Rational(a47(n)));
    case 71: return FieldElement(FieldLabel::Rational, Rational(a71(n)));
    case 135: return FieldElement(FieldLabel::Rational, Rational(a135(n)));
    case 648: return FieldElement(FieldLabel::Rational, Rational(a648(n)));
    case 1024: return a1024(n);
    default: return FieldElement(FieldLabel::Rational, Rational(a1872(n)));
  }
}

FieldElement oracle_coefficient(int level, i64 n) {
  require_level(level);
  if (n < 1 || n > 10'000'000) throw std::invalid_argument("--n out of range for the expansion oracle");
  const int N = static_cast<int>(n);
  if (level == 47 || level == 71) return eta_quotient(level_extractors(level)[0].spec, N)[N];
  return completion_series(level, N)[N];
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunOptions& options) {
  CLI::App app{"Exact q-series for eta-quotients and theta series of binary quadratic forms", "etaforms"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string format = "text", out_path;
  int order = 400;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "records"}));
  app.add_option("--out", out_path, "Write output to this file instead of stdout");
  auto* order_opt = app.add_option("--order", order, "Truncation order")->check(CLI::PositiveNumber);

  auto* expand = app.add_subcommand("expand", "Expand an eta-quotient, form theta series or f(q^u,q^v)");
  std::string eta_text, form_text, theta_text;
  auto* o_eta = expand->add_option("--eta", eta_text, "J:S^R,... meaning q^J prod E(q^S)^R");
  auto* o_form = expand->add_option("--form", form_text, "a,b,c for B(a,b,c,q)");
  auto* o_theta = expand->add_option("--theta", theta_text, "u,v for f(q^u,q^v)");
  o_eta->excludes(o_form)->excludes(o_theta);
  o_form->excludes(o_theta);

  auto* classgroup = app.add_subcommand("classgroup", "Reduced forms, structure and genera of H(d)");
  i64 disc = 0;
  classgroup->add_option("--disc", disc, "Negative discriminant")->required();

  auto* classify = app.add_subcommand("classify", "Class pair representing a prime");
  i64 prime = 0;
  classify->add_option("--disc", disc, "Discriminant")->required();
  classify->add_option("--p", prime, "Prime")->required();

  auto* hecke = app.add_subcommand("hecke", "Apply T_p to a form theta series or test a completion");
  int level = 0, which = 1;
  hecke->add_option("--disc", disc, "Discriminant (defaults to -level)");
  hecke->add_option("--p", prime, "Prime")->required();
  auto* h_form = hecke->add_option("--form", form_text, "a,b,c");
  auto* h_level = hecke->add_option("--level", level, "Completion of this level");
  hecke->add_option("--which", which, "Completion index A1, A2, A3 for levels 47 and 71");
  h_form->excludes(h_level);

  auto* coeff = app.add_subcommand("coeff", "Closed-form coefficient of the level's series");
  i64 n = 0;
  bool check = false;
  coeff->add_option("--level", level, "Level")->required();
  coeff->add_option("--n", n, "Index")->required();
  coeff->add_flag("--check", check, "Compare with a direct expansion");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  int jobs = 1;
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--jobs", jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  std::vector<const char*> argv{"etaforms"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  bool order_given = order_opt->count() > 0;
  if (!order_given) {
    if (const char* env = std::getenv("ETAFORMS_ORDER")) {
      try {
        order = parse_int(env, "ETAFORMS_ORDER");
      } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
      }
      if (order < 1) {
        err << "error: ETAFORMS_ORDER must be positive\n";
        return kUsage;
      }
      order_given = true;
    }
  }

  std::ostringstream buffer;
  Context ctx{buffer, format};
  int status = kOk;
  try {
    if (*expand) {
      if (!*o_eta && !*o_form && !*o_theta) throw std::invalid_argument("expand needs one of --eta, --form, --theta");
      if (*o_eta) {
        const auto spec = parse_eta_spec(eta_text);
        emit_series(ctx, "eta", spec.to_string(), eta_quotient(spec, order));
      } else if (*o_form) {
        const Form F = parse_form(form_text);
        emit_series(ctx, "theta-form", "B" + F.to_string(), theta_form(F, order));
      } else {
        const auto parts = split(theta_text, ',');
        if (parts.size() != 2) throw std::invalid_argument("--theta needs u,v");
        const int u = parse_int(parts[0], "--theta"), v = parse_int(parts[1], "--theta");
        emit_series(ctx, "theta-f", "f(q^" + std::to_string(u) + ",q^" + std::to_string(v) + ")",
                    theta_f(u, v, order));
      }
    } else if (*classgroup) {
      const ClassGroup g = enumerate_class_group(disc);
      std::vector<GenusCharacter> chars;
      try {
        chars = character_system(disc);
      } catch (const std::invalid_argument&) {
      }
      if (ctx.records()) {
        buffer << "disc=" << disc << "\nclass_number=" << g.size() << "\nstructure=" << g.structure_string() << "\n\n";
      } else {
        buffer << "H(" << disc << ") = " << g.structure_string() << ", h = " << g.size();
        if (!chars.empty()) {
          buffer << ", characters";
          for (const auto& ch : chars) buffer << ' ' << ch.label();
        }
        buffer << '\n';
      }
      for (int i = 0; i < g.size(); ++i) {
        const Form& F = g.classes[i];
        const std::string gen = chars.empty() ? "" : genus_string(genus_characters(F, chars));
        if (ctx.records()) {
          buffer << "form=" << F.to_string() << "\norder=" << g.element_order(i);
          if (!gen.empty()) buffer << "\ngenus=" << gen;
          buffer << "\n\n";
        } else {
          std::string f = F.to_string();
          f.resize(std::max<std::size_t>(f.size(), 14), ' ');
          buffer << "  " << f << " order " << g.element_order(i);
          if (!gen.empty()) buffer << "  genus " << gen;
          buffer << '\n';
        }
      }
    } else if (*classify) {
      const PrimeClassification c = classify_prime(disc, prime);
      if (ctx.records()) {
        buffer << "disc=" << c.discriminant << "\np=" << c.prime << "\nverdict=" << to_string(c.verdict)
               << "\nset=" << c.set_label << "\nmethod=" << c.method;
        if (c.form) buffer << "\nform=" << c.form->to_string();
        if (c.witness) buffer << "\nwitness=" << c.witness->first << ',' << c.witness->second;
        buffer << "\n\n";
      } else {
        buffer << c.to_string() << '\n';
      }
    } else if (*hecke) {
      if (*h_level) {
        require_level(level);
        if (which < 1 || which > completion_count(level)) throw std::invalid_argument("--which out of range");
        const i64 d = disc != 0 ? disc : level_discriminant(level);
        const QSeries A = completion_series(level, order, which - 1);
        const auto e = eigen_check(A, d, prime);
        const std::string name = "A" + std::to_string(which) + "(level " + std::to_string(level) + ")";
        if (ctx.records()) {
          buffer << "level=" << level << "\nwhich=" << which << "\np=" << prime << "\norder=" << order
                 << "\neigenvalue=" << (e ? e->to_string() : "none") << "\n\n";
        } else if (e) {
          const std::string lam = e->is_rational() ? e->to_string() : "(" + e->to_string() + ")";
          buffer << "T_" << prime << ' ' << name << " = " << lam << " * " << name << '\n';
        } else {
          buffer << name << " is not an eigenform of T_" << prime << " to order " << order << '\n';
        }
      } else {
        if (!*h_form) throw std::invalid_argument("hecke needs --form or --level");
        const Form F = parse_form(form_text);
        const i64 d = disc != 0 ? disc : F.discriminant();
        emit_series(ctx, "hecke", "T_" + std::to_string(prime) + " B" + F.to_string(),
                    apply_Tp(theta_form(F, order), d, prime));
      }
    } else if (*coeff) {
      const FieldElement f = options.formula ? options.formula(level, n) : formula_coefficient(level, n);
      if (!check) {
        if (ctx.records()) buffer << "level=" << level << "\nn=" << n << "\nformula=" << f.to_string() << "\n\n";
        else buffer << f.to_string() << '\n';
      } else {
        const FieldElement o = oracle_coefficient(level, n);
        const bool ok = f == o;
        if (!ok) status = kVerifyFailed;
        if (ctx.records()) {
          buffer << "level=" << level << "\nn=" << n << "\nformula=" << f.to_string() << "\noracle=" << o.to_string()
                 << "\ncheck=" << (ok ? "PASS" : "FAIL") << "\n\n";
        } else {
          buffer << "formula=" << f.to_string() << " oracle=" << o.to_string() << ' ' << (ok ? "PASS" : "FAIL")
                 << '\n';
        }
      }
    } else if (*verify) {
      if (jobs == 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
      if (suite == "gordon-hughes" && order_given && order < 2000) {
        throw std::invalid_argument("gordon-hughes needs --order >= 2000");
      }
      const auto reports = run_suite(suite, order_given ? order : 0, jobs);
      int passed = 0;
      for (const auto& r : reports) {
        passed += r.pass ? 1 : 0;
        buffer << (ctx.records() ? r.record() : r.line() + "\n");
      }
      if (!ctx.records()) buffer << "# " << passed << '/' << reports.size() << " passed\n";
      if (passed != static_cast<int>(reports.size())) status = kVerifyFailed;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      err << "error: cannot write " << out_path << '\n';
      return kUsage;
    }
    f << buffer.str();
  } else {
    out << buffer.str();
  }
  return status;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace etaforms::cli
