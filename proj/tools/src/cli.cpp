#include "skeinlab/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <algorithm>
#include <set>
#include <sstream>

#include "json_io.hpp"
#include "skein/atlcalc.hpp"
#include "skein/chebseries.hpp"
#include "skein/dehnverify.hpp"
#include "skein/diagram.hpp"
#include "skein/filtration.hpp"
#include "skein/tlcalc.hpp"

namespace skeinlab {

namespace {

using nlohmann::json;

// Carries an error class through to the JSON error object.
struct CliError : std::runtime_error {
  CliError(std::string cls, const std::string& msg, int code)
      : std::runtime_error(msg), error_class(std::move(cls)), exit_code(code) {}
  std::string error_class;
  int exit_code;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw CliError("io", "cannot open '" + path + "'", kUsage);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

skein::MorseWord load_word(const std::string& path) { return skein::parse_word(read_input(path)); }

void require_order(const char* name, int value) {
  if (value < 1) throw CliError("cap", std::string(name) + " must be >= 1", kUsage);
}

struct Options {
  std::string format = "json";
  unsigned long seed = 20261017;
  int jobs = 1;
  std::string file;
  bool check = false;
  std::vector<int> marks;
  int order = 4;
  int cap = 4;
  int n = 0;
  int strands = 1;
  int power = 1;
  std::string mode = "algebra";
  std::string kind = "T";
};

void emit(const json& body, const Options& opt, std::ostream& out) {
  json doc = body;
  doc["schema"] = kSchema;
  if (opt.format == "text") {
    for (const auto& [key, value] : doc.items()) {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  } else {
    out << doc.dump() << "\n";
  }
}

std::set<int> mark_set(const Options& opt) { return std::set<int>(opt.marks.begin(), opt.marks.end()); }

int cmd_parse(const Options& opt, std::ostream& out) {
  const skein::MorseWord word = load_word(opt.file);
  const skein::ComponentMap comps = skein::components(word);
  json closed = json::array();
  for (bool c : comps.closed) closed.push_back(c);
  emit({{"ok", true},
        {"canonical", skein::print_word(word)},
        {"crossings", skein::crossing_count(word)},
        {"components", comps.count},
        {"closed", closed}},
       opt, out);
  return kOk;
}

int cmd_bracket(const Options& opt, std::ostream& out) {
  const skein::LaurentPoly k = skein::bracket(load_word(opt.file));
  emit({{"laurent", laurent_json(k)}, {"text", k.to_string()}}, opt, out);
  return kOk;
}

int cmd_star_bracket(const Options& opt, std::ostream& out) {
  const auto marked = mark_set(opt);
  const skein::LaurentPoly k = skein::star_bracket(load_word(opt.file), marked);
  const int div = skein::divisibility_order(k, skein::LaurentPoly::A(1) + skein::LaurentPoly(1));
  json j{{"laurent", laurent_json(k)}, {"text", k.to_string()}, {"marked", opt.marks}};
  if (div == skein::kInfiniteOrder) {
    j["a_plus_one_order"] = "inf";
  } else {
    j["a_plus_one_order"] = div;
  }
  emit(j, opt, out);
  return kOk;
}

int cmd_reduce(const Options& opt, std::ostream& out) {
  const skein::MorseWord word = load_word(opt.file);
  const skein::Element e = skein::resolve_word(word);
  json j = element_json(e);
  j["ambient"] = word.ambient == skein::Ambient::kDisk ? "disk" : "annulus";
  emit(j, opt, out);
  return kOk;
}

int cmd_cheb(const Options& opt, std::ostream& out) {
  if (opt.n < 0) throw CliError("cap", "--n must be >= 0", kUsage);
  const skein::RationalPoly p = opt.kind == "T" ? skein::cheb_T(opt.n) : skein::t_plus_one(opt.n);
  emit({{"kind", opt.kind}, {"n", opt.n}, {"variable", "X"}, {"series", poly_json(p)}}, opt, out);
  return kOk;
}

int cmd_acoef(const Options& opt, std::ostream& out) {
  if (opt.order < 2) throw CliError("cap", "--order must be >= 2", kUsage);
  const auto a = skein::a_coefficients(opt.order);
  json arr = json::array();
  for (std::size_t i = 2; i < a.size(); ++i) arr.push_back({static_cast<int>(i), 0, skein::to_string(a[i])});
  emit({{"order", opt.order}, {"series", arr}}, opt, out);
  return kOk;
}

int cmd_xc(const Options& opt, std::ostream& out) {
  if (opt.order < 2) throw CliError("cap", "--order must be >= 2", kUsage);
  const skein::TwistElement x = skein::xc_truncated(opt.order);
  emit({{"order", x.order}, {"variables", {"u", "w"}}, {"series", series_json(x.series)}}, opt, out);
  return kOk;
}

int cmd_valuation(const Options& opt, std::ostream& out) {
  require_order("--cap", opt.cap);
  const skein::MorseWord word = load_word(opt.file);
  const skein::Element e = skein::resolve_word(word);
  skein::ValuationReport r;
  if (opt.mode == "algebra") {
    if (word.ambient != skein::Ambient::kAnnulus || word.bottom != 0 || word.top != 0) {
      throw CliError("ambient", "algebra mode expects a closed annulus word", kUsage);
    }
    r = skein::valuation_algebra(e, opt.cap, skein::print_word(word));
  } else {
    if (word.ambient != skein::Ambient::kAnnulus || word.bottom != 1 || word.top != 1) {
      throw CliError("ambient", "strand mode expects an annulus word with one strand", kUsage);
    }
    r = skein::valuation_strand(skein::element_to_strand(e), opt.cap, skein::print_word(word));
  }
  emit(valuation_json(r), opt, out);
  return kOk;
}

int cmd_finite_type(const Options& opt, std::ostream& out) {
  if (opt.n < 0) throw CliError("cap", "--order must be >= 0", kUsage);
  const skein::FiniteTypeResult r = skein::finite_type_sum(load_word(opt.file), opt.n);
  json j{{"order", r.order},
         {"components", r.components},
         {"scaled_sum", laurent_json(r.scaled_sum)},
         {"divisible", r.divisible}};
  if (r.divisibility == skein::kInfiniteOrder) {
    j["a_plus_one_order"] = "inf";
  } else {
    j["a_plus_one_order"] = r.divisibility;
  }
  emit(j, opt, out);
  return r.divisible ? kOk : kMathFailure;
}

int cmd_star(const Options& opt, std::ostream& out) {
  const auto terms = skein::star_element(load_word(opt.file), mark_set(opt));
  json arr = json::array();
  skein::LaurentPoly total;
  bool closed = true;
  for (const auto& t : terms) {
    arr.push_back({{"weight", t.weight.get_str()}, {"word", skein::print_word(t.word)}});
    if (t.word.bottom == 0 && t.word.top == 0 && t.word.ambient == skein::Ambient::kDisk) {
      total += skein::bracket(t.word) * skein::Rational(t.weight);
    } else {
      closed = false;
    }
  }
  json j{{"marked", opt.marks}, {"terms", arr}};
  if (closed) j["bracket"] = laurent_json(total);
  emit(j, opt, out);
  return kOk;
}

int cmd_verify_dehn(const Options& opt, std::ostream& out) {
  require_order("--order", opt.order);
  if (opt.strands < 1 || opt.strands > 3) throw CliError("cap", "--strands must be 1..3", kUsage);
  const auto profile = skein::calibrate();
  const auto rep = skein::verify_main(opt.strands, opt.order, profile.conventions);
  emit(report_json(rep), opt, out);
  return rep.pass ? kOk : kMathFailure;
}

int cmd_verify_lemma(const Options& opt, std::ostream& out) {
  require_order("--power", opt.power);
  if (opt.strands < 1 || opt.strands > 2) throw CliError("cap", "--strands must be 1 or 2", kUsage);
  const auto profile = skein::calibrate();
  const auto rep = skein::verify_lemma421(opt.strands, opt.power, profile.conventions);
  emit(report_json(rep), opt, out);
  return rep.pass ? kOk : kMathFailure;
}

int cmd_calibrate(const Options& opt, std::ostream& out) {
  json trials = json::array();
  int passing = 0;
  skein::Conventions chosen;
  for (bool swap : {false, true}) {
    for (bool reverse : {false, true}) {
      const skein::ProfileTrial t = skein::run_gates({swap, reverse});
      json gates = json::array();
      for (const auto& g : t.gates) gates.push_back({{"gate", g.name}, {"pass", g.passed}});
      trials.push_back({{"profile", skein::describe(t.conventions)}, {"gates", gates}, {"pass", t.passed()}});
      if (t.passed()) {
        ++passing;
        chosen = t.conventions;
      }
    }
  }
  json j{{"trials", trials}, {"passing", passing}};
  if (passing == 1) {
    j["profile"] = skein::describe(chosen);
    j["wrap_left_r0"] = strand_json(skein::strand_wrap_multiplier(true, chosen));
    j["wrap_right_r0"] = strand_json(skein::strand_wrap_multiplier(false, chosen));
  }
  emit(j, opt, out);
  return passing == 1 ? kOk : kMathFailure;
}

int emit_error(const std::string& cls, const std::string& msg, int code, std::ostream& out, std::ostream& err,
               int line = 0, int column = 0) {
  json e{{"class", cls}, {"message", msg}};
  if (line > 0) {
    e["line"] = line;
    e["column"] = column;
  }
  out << json{{"schema", kSchema}, {"error", e}}.dump() << "\n";
  err << "skeinlab: " << cls << ": " << msg;
  if (line > 0) err << " (line " << line << ", column " << column << ")";
  err << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  if (const char* env = std::getenv("SKEINLAB_JOBS")) opt.jobs = std::max(1, std::atoi(env));

  CLI::App app{"Kauffman bracket skein calculus and Dehn twist verification"};
  app.name("skeinlab");
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag_callback("--json", [&opt] { opt.format = "json"; }, "Shorthand for --format json");
  app.add_option("--seed", opt.seed, "Seed for randomized suites");
  app.add_option("--jobs", opt.jobs, "Worker count (also SKEINLAB_JOBS)")->check(CLI::PositiveNumber);

  auto* parse = app.add_subcommand("parse", "Validate a word and echo its canonical form");
  parse->add_option("file", opt.file)->required();
  parse->add_flag("--check", opt.check, "Only validate");

  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket of a closed disk word");
  bracket->add_option("file", opt.file)->required();

  auto* star_bracket = app.add_subcommand("star-bracket", "Weighted sublink bracket sum");
  star_bracket->add_option("file", opt.file)->required();
  star_bracket->add_option("--mark", opt.marks, "Component indices (0-based)")->delimiter(',');

  auto* reduce = app.add_subcommand("reduce", "Normal form of a disk or annulus word");
  reduce->add_option("file", opt.file)->required();

  auto* cheb = app.add_subcommand("cheb", "T_n or (T+1)_n");
  cheb->add_option("--n", opt.n)->required();
  cheb->add_option("--kind", opt.kind)->check(CLI::IsMember({"T", "tplus"}));

  auto* acoef = app.add_subcommand("acoef", "Coefficients a_2..a_N of (log(-x))^2");
  acoef->add_option("--order", opt.order)->required();

  auto* xc = app.add_subcommand("xc", "Truncated twist element in (u, w)");
  xc->add_option("--order", opt.order)->required();

  auto* valuation = app.add_subcommand("valuation", "Filtration valuation of an annulus element");
  valuation->add_option("file", opt.file)->required();
  valuation->add_option("--mode", opt.mode)->check(CLI::IsMember({"algebra", "strand"}));
  valuation->add_option("--cap", opt.cap);

  auto* finite = app.add_subcommand("finite-type", "Alternating sublink sum and (A+1)-divisibility");
  finite->add_option("file", opt.file)->required();
  finite->add_option("--order", opt.n)->required();

  auto* star = app.add_subcommand("star", "Weighted sublink expansion");
  star->add_option("file", opt.file)->required();
  star->add_option("--mark", opt.marks, "Component indices (0-based)")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "Verification suites");
  verify->require_subcommand(1);
  auto* dehn = verify->add_subcommand("dehn", "Twist formula mod F^N");
  dehn->add_option("--strands", opt.strands);
  dehn->add_option("--order", opt.order)->required();
  auto* lemma = verify->add_subcommand("lemma421", "(t-1)^{2n+m}(id) in F^n");
  lemma->add_option("--strands", opt.strands);
  lemma->add_option("--power", opt.power)->required();

  auto* calibrate = app.add_subcommand("calibrate", "Pin the sign conventions");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("skeinlab");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    return emit_error("usage", e.what(), kUsage, out, err);
  }

  try {
    if (parse->parsed()) return cmd_parse(opt, out);
    if (bracket->parsed()) return cmd_bracket(opt, out);
    if (star_bracket->parsed()) return cmd_star_bracket(opt, out);
    if (reduce->parsed()) return cmd_reduce(opt, out);
    if (cheb->parsed()) return cmd_cheb(opt, out);
    if (acoef->parsed()) return cmd_acoef(opt, out);
    if (xc->parsed()) return cmd_xc(opt, out);
    if (valuation->parsed()) return cmd_valuation(opt, out);
    if (finite->parsed()) return cmd_finite_type(opt, out);
    if (star->parsed()) return cmd_star(opt, out);
    if (dehn->parsed()) return cmd_verify_dehn(opt, out);
    if (lemma->parsed()) return cmd_verify_lemma(opt, out);
    if (calibrate->parsed()) return cmd_calibrate(opt, out);
  } catch (const CliError& e) {
    return emit_error(e.error_class, e.what(), e.exit_code, out, err);
  } catch (const skein::DiagramError& e) {
    return emit_error(e.error_class(), e.what(), kUsage, out, err, e.line(), e.column());
  } catch (const std::domain_error& e) {
    return emit_error("math-domain", e.what(), kMathFailure, out, err);
  } catch (const std::invalid_argument& e) {
    return emit_error("invalid-argument", e.what(), kUsage, out, err);
  } catch (const std::runtime_error& e) {
    return emit_error("runtime", e.what(), kMathFailure, out, err);
  }
  return emit_error("usage", "no subcommand", kUsage, out, err);
}

}  // namespace skeinlab
