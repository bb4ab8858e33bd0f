#include "convkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <sstream>

#include "convkit/constructions.hpp"
#include "convkit/decoders.hpp"
#include "convkit/io.hpp"
#include "convkit/metrics.hpp"
#include "convkit/sysrep.hpp"

namespace convkit::cli {

namespace {

const std::vector<std::string> kRecipes = {"justesen-mds",     "gll-mds",  "smith-mds",
                                           "mdp-superregular", "anp-mdp",  "complete-mdp-binomial",
                                           "complete-mdp-alpha", "system-mds"};

struct RecipeArgs {
  std::string recipe;
  std::size_t n = 2;
  std::size_t k = 1;
  int delta = 1;
  std::uint32_t p = 2;
  std::uint32_t N = 1;
  std::uint32_t a = 0;
  std::uint32_t r = 1;
};

void add_parameter_options(CLI::App* app, RecipeArgs& a) {
  app->add_option("--n", a.n, "Code length")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--k", a.k, "Code dimension")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--delta", a.delta, "Code degree")->capture_default_str()->check(CLI::NonNegativeNumber);
  app->add_option("--p", a.p, "Field characteristic")->capture_default_str();
  app->add_option("--N", a.N, "Extension degree")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--a", a.a, "Number of phases per symbol (smith-mds)");
  app->add_option("--r", a.r, "Extension degree of the cyclic code field (smith-mds)")->capture_default_str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string bool_str(bool b) { return b ? "true" : "false"; }

ConstructionResult build_recipe(const RecipeArgs& a, const Budgets& budgets) {
  const auto field = [&] { return Field::make(a.p, a.N); };
  if (a.recipe == "justesen-mds") return justesen_mds(a.n, field());
  if (a.recipe == "gll-mds") return gll_mds(a.n, a.delta, field());
  if (a.recipe == "smith-mds") {
    if (a.a == 0) throw InvalidArgument("smith-mds needs --a");
    return smith_mds(a.n, a.k, a.delta, a.a, a.p, a.r);
  }
  if (a.recipe == "mdp-superregular") {
    if (a.k >= a.n) throw InvalidArgument("need k < n");
    const int L = a.delta / static_cast<int>(a.k) + a.delta / static_cast<int>(a.n - a.k);
    const std::size_t size = static_cast<std::size_t>(L + 1) * (2 * a.n - a.k - 1);
    const auto T = binomial_superregular(size, budgets);
    return mdp_from_superregular(a.n, a.k, a.delta, T.matrix, budgets);
  }
  if (a.recipe == "anp-mdp") return anp_mdp(a.n, a.k, a.delta, a.p, a.N);
  if (a.recipe == "complete-mdp-binomial") {
    auto res = complete_mdp_binomial(a.n, a.k, a.delta, a.p);
    res.result.params.emplace_back("characteristic_bound", res.characteristic_bound);
    return res.result;
  }
  if (a.recipe == "complete-mdp-alpha") return complete_mdp_alpha(a.n, a.k, a.delta, a.p, a.N);
  if (a.recipe == "system-mds") {
    if (a.delta < 0) throw InvalidArgument("delta must be nonnegative");
    const FieldPtr f = field();
    const auto s = mds_from_system(a.n, static_cast<std::size_t>(a.delta), f);
    std::string residues;
    for (auto r : s.residues) residues += (residues.empty() ? "" : " ") + std::to_string(r);
    return ConstructionResult{s.code,
                              "system-mds",
                              {{"n", std::to_string(a.n)},
                               {"delta", std::to_string(a.delta)},
                               {"field", f->literal()},
                               {"residues", residues}},
                              true};
  }
  throw InvalidArgument("unknown recipe '" + a.recipe + "'");
}

std::vector<std::string> provenance(const ConstructionResult& res) {
  std::vector<std::string> out{"recipe: " + res.recipe};
  for (const auto& [key, value] : res.params) out.push_back(key + ": " + value);
  out.push_back("guaranteed: " + yes_no(res.guaranteed));
  return out;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    write_text_file(path, text);
}

ConvolutionalCode load_code(const std::string& path) { return parse_code_file(read_text_file(path)).code(); }

std::string one_line(const PolyMatrix& m) {
  std::string s = format_poly_matrix(m);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  std::string out;
  for (char c : s) {
    if (c == '\n')
      out += " | ";
    else
      out += c;
  }
  return out;
}

std::string join(const std::vector<std::size_t>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return out;
}

void print_verdict(std::ostream& out, const std::string& key, const Verdict& v) {
  out << key << ": " << bool_str(v.holds) << '\n';
  out << key << "_examined: " << v.examined << '\n';
  if (!v.witness) return;
  const Witness& w = *v.witness;
  out << key << "_witness:";
  if (!w.rows.empty() || !w.cols.empty()) out << " rows=" << join(w.rows, ',') << " cols=" << join(w.cols, ',');
  if (w.index >= 0) out << " index=" << w.index;
  if (w.value >= 0) out << " value=" << w.value;
  out << '\n';
}

std::vector<std::pair<std::size_t, std::size_t>> parse_positions(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("pattern entries are step:index");
    out.emplace_back(std::stoul(item.substr(0, colon)), std::stoul(item.substr(colon + 1)));
  }
  return out;
}

std::uint64_t env_budget(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  std::size_t pos = 0;
  std::uint64_t x = 0;
  try {
    x = std::stoull(v, &pos);
  } catch (const std::exception&) {
    throw InvalidArgument(std::string("bad value for ") + name);
  }
  if (pos != std::string(v).size() || x == 0) throw InvalidArgument(std::string("bad value for ") + name);
  return x;
}

// Message components, read from a file when the argument names one.
PolyVector load_message(const FieldPtr& field, const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return parse_poly_vector(field, read_text_file(arg));
  return parse_poly_vector(field, arg);
}

void write_report(std::ostream& os, const DecodeReport& rep) {
  os << "status: " << to_string(rep.status) << '\n';
  os << "initial_erasures: " << rep.initial_erasures << '\n';
  os << "remaining_erasures: " << rep.unrecovered.size() << '\n';
  os << "recovered_symbols: " << rep.initial_erasures - rep.unrecovered.size() << '\n';
  os << "windows: " << rep.trace.size() << '\n';
  for (const auto& w : rep.trace)
    os << "window: " << to_string(w.kind) << " start=" << w.start << " j=" << w.j << " unknowns=" << w.unknowns
       << " rank=" << w.rank << " solved=" << bool_str(w.solved) << '\n';
  os << "unrecovered:";
  for (const auto& [t, i] : rep.unrecovered) os << ' ' << t << ':' << i;
  os << '\n';
}

}  // namespace

Budgets budgets_from_environment() {
  Budgets b;
  b.enumeration = env_budget("CONVKIT_ENUM_BUDGET", b.enumeration);
  b.minors = env_budget("CONVKIT_MINOR_BUDGET", b.minors);
  b.trellis = env_budget("CONVKIT_TRELLIS_BUDGET", b.trellis);
  return b;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, analyze, realize and decode convolutional codes over finite fields.", "convkit"};
  app.require_subcommand(1);
  std::vector<std::pair<CLI::App*, std::function<int()>>> handlers;

  // construct
  RecipeArgs cons;
  std::string cons_out;
  auto* construct = app.add_subcommand("construct", "Build a code from a named recipe and write it as .ccode");
  construct->add_option("recipe", cons.recipe, "Recipe name")->required()->check(CLI::IsMember(kRecipes));
  add_parameter_options(construct, cons);
  construct->add_option("-o,--output", cons_out, "Output file (stdout when absent)");
  handlers.emplace_back(construct, [&] {
    const auto res = build_recipe(cons, budgets_from_environment());
    emit(cons_out, format_code_file(res.code, provenance(res)), out);
    return 0;
  });

  // analyze
  struct {
    std::string path;
    bool free_distance = false;
    int cap = -1;
    int columns = -1;
    bool mds = false, smds = false, mdp = false, reverse = false, complete = false;
    std::string method = "distances";
  } an;
  auto* analyze = app.add_subcommand("analyze", "Report parameters, distances and optimality predicates");
  analyze->add_option("code", an.path, "Code file (.ccode)")->required()->check(CLI::ExistingFile);
  analyze->add_flag("--free-distance", an.free_distance, "Compute the free distance");
  analyze->add_option("--bruteforce-cap", an.cap, "Use brute force over messages of degree <= cap")
      ->check(CLI::NonNegativeNumber);
  analyze->add_option("--column-distances", an.columns, "Column distances d_0 .. d_J")->check(CLI::NonNegativeNumber);
  analyze->add_flag("--mds", an.mds, "Test the generalized Singleton bound");
  analyze->add_flag("--smds", an.smds, "Test strong MDS");
  analyze->add_flag("--mdp", an.mdp, "Test maximum distance profile");
  analyze->add_option("--mdp-method", an.method, "distances, minors or both")
      ->check(CLI::IsMember({"distances", "minors", "both"}))
      ->capture_default_str();
  analyze->add_flag("--reverse-mdp", an.reverse, "Test reverse MDP");
  analyze->add_flag("--complete-mdp", an.complete, "Test complete MDP");
  handlers.emplace_back(analyze, [&] {
    const Budgets budgets = budgets_from_environment();
    const ConvolutionalCode C = load_code(an.path);
    const Bounds bd = bounds(C);
    out << "field: " << C.field()->literal() << '\n';
    out << "n: " << C.n() << '\n' << "k: " << C.k() << '\n' << "delta: " << C.degree() << '\n';
    out << "L: " << C.L() << '\n' << "M: " << C.M() << '\n';
    out << "row_degrees:";
    for (int d : C.row_degrees()) out << ' ' << d;
    out << '\n';
    out << "left_prime: " << bool_str(C.noncatastrophic()) << '\n';
    out << "row_reduced: " << bool_str(is_row_reduced(C.generator())) << '\n';
    out << "generator: " << one_line(C.generator()) << '\n';
    out << "parity_check: " << (C.parity_check() ? one_line(*C.parity_check()) : std::string("none")) << '\n';
    out << "singleton_bound: " << bd.singleton << '\n';
    if (an.free_distance || an.cap >= 0) {
      FreeDistance fd;
      if (an.cap >= 0)
        fd = free_distance(C, FreeDistanceMethod::BruteForce, an.cap, budgets);
      else if (C.noncatastrophic())
        fd = free_distance(C, FreeDistanceMethod::StateGraph, -1, budgets);
      else
        throw InvalidArgument("catastrophic code: pass --bruteforce-cap");
      out << "free_distance: " << fd.value << '\n';
      out << "free_distance_method: " << to_string(fd.method) << '\n';
      out << "free_distance_certified: " << bool_str(fd.certified) << '\n';
      if (fd.cap >= 0) out << "free_distance_cap: " << fd.cap << '\n';
    }
    for (int j = 0; j <= an.columns; ++j) {
      out << "column_distance_" << j << ": " << column_distance(C, j, budgets) << '\n';
      out << "column_bound_" << j << ": " << bd.column(j) << '\n';
    }
    if (an.mds) print_verdict(out, "mds", is_mds(C, budgets));
    if (an.smds) print_verdict(out, "smds", is_smds(C, budgets));
    bool mdp_known = false, mdp_value = false;
    if (an.mdp) {
      if (an.method != "minors") {
        const Verdict v = is_mdp(C, MdpMethod::Distances, budgets);
        print_verdict(out, "mdp", v);
        mdp_known = true;
        mdp_value = v.holds;
      }
      if (an.method != "distances") {
        const Verdict v = is_mdp(C, MdpMethod::Minors, budgets);
        print_verdict(out, "mdp_minors", v);
        mdp_known = true;
        mdp_value = v.holds;
      }
    }
    if (an.reverse) {
      if (!mdp_known) mdp_value = is_mdp(C, MdpMethod::Distances, budgets).holds;
      if (mdp_value)
        print_verdict(out, "reverse_mdp", is_reverse_mdp(C, budgets));
      else
        out << "reverse_mdp: false\nreverse_mdp_note: code is not MDP\n";
    }
    if (an.complete) print_verdict(out, "complete_mdp", is_complete_mdp(C, budgets));
    return 0;
  });

  // encode
  std::string enc_code, enc_msg, enc_out;
  std::size_t enc_steps = 0;
  auto* encode = app.add_subcommand("encode", "Encode a message u as the codeword stream of u G");
  encode->add_option("code", enc_code, "Code file (.ccode)")->required()->check(CLI::ExistingFile);
  encode->add_option("message", enc_msg, "Message literal such as '1 1 ; 0 1', or a file holding one")->required();
  encode->add_option("--steps", enc_steps, "Stream length (default: codeword degree + 1)");
  encode->add_option("-o,--output", enc_out, "Output stream file");
  handlers.emplace_back(encode, [&] {
    const ConvolutionalCode C = load_code(enc_code);
    const PolyVector u = load_message(C.field(), enc_msg);
    if (u.size() != C.k()) throw InvalidArgument("message needs k components");
    const PolyVector c = C.encode(u);
    const std::size_t natural = static_cast<std::size_t>(std::max(degree(c), 0)) + 1;
    if (enc_steps != 0 && enc_steps < natural) throw InvalidArgument("--steps is shorter than the codeword");
    emit(enc_out, format_stream(stream_from_codeword(c, std::max(enc_steps, natural))), out);
    return 0;
  });

  // channel
  auto* channel = app.add_subcommand("channel", "Pass a stream through an erasure or q-ary symmetric channel");
  channel->require_subcommand(1);
  struct {
    std::string stream, out, pattern, burst, code;
    double rate = -1.0, eps = 0.0;
    std::uint64_t seed = kDefaultSeed;
    std::uint32_t p = 2, N = 1;
  } ch;
  auto* erase = channel->add_subcommand("erase", "Erase symbols");
  erase->add_option("stream", ch.stream, "Input stream file")->required()->check(CLI::ExistingFile);
  auto* rate_opt = erase->add_option("--rate", ch.rate, "Independent erasure probability per symbol");
  auto* pattern_opt = erase->add_option("--pattern", ch.pattern, "Erase positions step:index,step:index,...");
  auto* burst_opt = erase->add_option("--burst", ch.burst, "Erase whole steps start:length");
  rate_opt->excludes(pattern_opt)->excludes(burst_opt);
  pattern_opt->excludes(burst_opt);
  erase->add_option("--seed", ch.seed, "Random seed")->capture_default_str();
  erase->add_option("-o,--output", ch.out, "Output stream file");
  handlers.emplace_back(erase, [&] {
    const SymbolStream s = to_symbol_stream(parse_stream(read_text_file(ch.stream)));
    ErasureModel model;
    if (!ch.pattern.empty()) {
      model = ErasureModel::pattern(parse_positions(ch.pattern));
    } else if (!ch.burst.empty()) {
      const auto pos = parse_positions(ch.burst);
      if (pos.size() != 1) throw ParseError("burst is start:length");
      model = ErasureModel::burst(pos[0].first, pos[0].second);
    } else {
      if (ch.rate < 0.0) throw InvalidArgument("one of --rate, --pattern or --burst is required");
      model = ErasureModel::iid(ch.rate);
    }
    emit(ch.out, format_stream(erase_channel(s, model, ch.seed)), out);
    return 0;
  });
  auto* qsc = channel->add_subcommand("qsc", "Replace symbols by uniformly chosen other field elements");
  qsc->add_option("stream", ch.stream, "Input stream file")->required()->check(CLI::ExistingFile);
  qsc->add_option("--eps", ch.eps, "Symbol error probability")->required();
  qsc->add_option("--code", ch.code, "Take the field from this code file")->check(CLI::ExistingFile);
  qsc->add_option("--p", ch.p, "Field characteristic")->capture_default_str();
  qsc->add_option("--N", ch.N, "Extension degree")->capture_default_str();
  qsc->add_option("--seed", ch.seed, "Random seed")->capture_default_str();
  qsc->add_option("-o,--output", ch.out, "Output stream file");
  handlers.emplace_back(qsc, [&] {
    const FieldPtr f = ch.code.empty() ? Field::make(ch.p, ch.N) : load_code(ch.code).field();
    const SymbolStream s = to_symbol_stream(parse_stream(read_text_file(ch.stream)));
    emit(ch.out, format_stream(qsc_channel(s, f, ch.eps, ch.seed)), out);
    return 0;
  });

  // decode-erasure
  struct {
    std::string code, stream, report, out;
    bool bidirectional = false, terminated = false, no_guard = false;
    int jmax = -1;
  } de;
  auto* decode_erasure = app.add_subcommand(
      "decode-erasure", "Sliding-window erasure recovery; exits 1 unless every erasure is recovered");
  decode_erasure->add_option("code", de.code, "Code file (.ccode)")->required()->check(CLI::ExistingFile);
  decode_erasure->add_option("stream", de.stream, "Received stream with '?' for erasures")
      ->required()
      ->check(CLI::ExistingFile);
  decode_erasure->add_flag("--bidirectional", de.bidirectional, "Alternate forward and reverse-code passes");
  decode_erasure->add_flag("--terminated", de.terminated, "Steps past the end of the stream are zero");
  decode_erasure->add_option("--jmax", de.jmax, "Largest window index (default L)");
  decode_erasure->add_flag("--no-guard", de.no_guard, "Disable guard-space restarts");
  decode_erasure->add_option("--report", de.report, "Write the report here; the stream then goes to stdout");
  decode_erasure->add_option("-o,--output", de.out, "Write the recovered stream here");
  handlers.emplace_back(decode_erasure, [&] {
    const ConvolutionalCode C = load_code(de.code);
    const ErasureStream w = parse_stream(read_text_file(de.stream));
    if (w.n != C.n() && !w.steps.empty()) throw InvalidArgument("stream width differs from n");
    ErasureDecoderOptions opt;
    opt.j_max = de.jmax;
    opt.terminated = de.terminated;
    opt.guard_space = !de.no_guard;
    const DecodeReport rep =
        de.bidirectional ? erasure_decode_bidirectional(C, w, opt) : erasure_decode_forward(C, w, opt);
    std::ostringstream report;
    write_report(report, rep);
    const std::string stream = format_stream(rep.recovered);
    if (de.report.empty()) {
      out << report.str();
      if (!de.out.empty()) write_text_file(de.out, stream);
    } else {
      write_text_file(de.report, report.str());
      emit(de.out, stream, out);
    }
    return rep.status == DecodeStatus::Complete ? 0 : 1;
  });

  // decode-viterbi
  std::string vi_code, vi_stream, vi_out;
  auto* decode_viterbi = app.add_subcommand("decode-viterbi", "Minimum-distance decoding of a received stream");
  decode_viterbi->add_option("code", vi_code, "Code file (.ccode)")->required()->check(CLI::ExistingFile);
  decode_viterbi->add_option("stream", vi_stream, "Received stream")->required()->check(CLI::ExistingFile);
  decode_viterbi->add_option("-o,--output", vi_out, "Write the decoded codeword stream here");
  handlers.emplace_back(decode_viterbi, [&] {
    const ConvolutionalCode C = load_code(vi_code);
    const SymbolStream r = to_symbol_stream(parse_stream(read_text_file(vi_stream)));
    if (r.n != C.n() && !r.steps.empty()) throw InvalidArgument("stream width differs from n");
    const ViterbiResult v = viterbi_decode(C, r, budgets_from_environment());
    out << "distance: " << v.distance << '\n';
    out << "steps: " << v.steps << '\n';
    out << "message: " << format_poly_vector(v.message) << '\n';
    out << "codeword: " << format_poly_vector(v.codeword) << '\n';
    if (!vi_out.empty()) {
      const std::size_t steps = std::max(static_cast<std::size_t>(std::max(degree(v.codeword), 0)) + 1, r.steps.size());
      write_text_file(vi_out, format_stream(stream_from_codeword(v.codeword, steps)));
    }
    return 0;
  });

  // realize / codeify
  std::string re_in, re_out;
  auto* realize = app.add_subcommand("realize", "Write a controller-form ISO realization (.iso)");
  realize->add_option("code", re_in, "Code file (.ccode)")->required()->check(CLI::ExistingFile);
  realize->add_option("-o,--output", re_out, "Output file");
  handlers.emplace_back(realize, [&] {
    const Realization r = iso_from_code(load_code(re_in));
    emit(re_out, format_iso_file(r.system, &r.columns), out);
    return 0;
  });
  std::string co_in, co_out;
  auto* codeify = app.add_subcommand("codeify", "Write the code of an ISO realization (.ccode)");
  codeify->add_option("iso", co_in, "ISO file (.iso)")->required()->check(CLI::ExistingFile);
  codeify->add_option("-o,--output", co_out, "Output file");
  handlers.emplace_back(codeify, [&] {
    const IsoFile iso = parse_iso_file(read_text_file(co_in));
    ConvolutionalCode C = code_from_iso(iso.system);
    if (iso.columns) {
      std::vector<std::size_t> order(iso.columns->size());
      for (std::size_t i = 0; i < order.size(); ++i) order[(*iso.columns)[i]] = i;
      C = permute_columns(C, order);
    }
    emit(co_out, format_code_file(C), out);
    return 0;
  });

  // simulate
  RecipeArgs sim;
  sim.recipe = "anp-mdp";
  sim.delta = 2;
  sim.N = 4;
  struct {
    std::string code, channel = "erase";
    std::size_t trials = 20;
    int degree = 4;
    double rate = 0.1, eps = 0.02;
    std::uint64_t seed = kDefaultSeed;
    bool bidirectional = false, no_guard = false;
    int jmax = -1;
  } si;
  auto* simulate = app.add_subcommand("simulate", "Construct, encode, pass through a channel, decode and score");
  simulate->add_option("--recipe", sim.recipe, "Recipe name")->check(CLI::IsMember(kRecipes))->capture_default_str();
  add_parameter_options(simulate, sim);
  simulate->add_option("--code", si.code, "Use this code file instead of a recipe")->check(CLI::ExistingFile);
  simulate->add_option("--channel", si.channel, "erase or qsc")
      ->check(CLI::IsMember({"erase", "qsc"}))
      ->capture_default_str();
  simulate->add_option("--trials", si.trials, "Number of messages")->capture_default_str();
  simulate->add_option("--degree", si.degree, "Message degree")->capture_default_str()->check(CLI::NonNegativeNumber);
  simulate->add_option("--rate", si.rate, "Erasure probability")->capture_default_str();
  simulate->add_option("--eps", si.eps, "Symbol error probability")->capture_default_str();
  simulate->add_option("--seed", si.seed, "Random seed")->capture_default_str();
  simulate->add_flag("--bidirectional", si.bidirectional, "Bidirectional erasure decoding");
  simulate->add_flag("--no-guard", si.no_guard, "Disable guard-space restarts");
  simulate->add_option("--jmax", si.jmax, "Largest window index (default L)");
  handlers.emplace_back(simulate, [&] {
    const Budgets budgets = budgets_from_environment();
    std::optional<ConvolutionalCode> code;
    std::string source;
    if (si.code.empty()) {
      const auto res = build_recipe(sim, budgets);
      code = res.code;
      source = res.recipe;
    } else {
      code = load_code(si.code);
      source = si.code;
    }
    const ConvolutionalCode& C = *code;
    const std::uint64_t q = C.field()->order();
    int max_row = 0;
    for (int d : C.row_degrees()) max_row = std::max(max_row, d);
    const std::size_t steps = static_cast<std::size_t>(si.degree + max_row + 1);

    Rng rng(si.seed);
    std::size_t symbols = 0, events = 0, recovered = 0, unrecovered = 0, corrupted = 0;
    std::size_t complete = 0, partial = 0, failed = 0, correct = 0, wrong = 0;
    for (std::size_t trial = 0; trial < si.trials; ++trial) {
      PolyVector u;
      for (std::size_t i = 0; i < C.k(); ++i) {
        std::vector<Elem> coeffs;
        for (int d = 0; d <= si.degree; ++d) coeffs.push_back(static_cast<Elem>(rng.below(q)));
        u.emplace_back(C.field(), coeffs);
      }
      const SymbolStream sent = stream_from_codeword(C.encode(u), steps);
      const std::uint64_t channel_seed = rng.next();
      symbols += steps * C.n();
      if (si.channel == "erase") {
        const ErasureStream w = erase_channel(sent, ErasureModel::iid(si.rate), channel_seed);
        ErasureDecoderOptions opt;
        opt.j_max = si.jmax;
        opt.terminated = true;
        opt.guard_space = !si.no_guard;
        const DecodeReport rep =
            si.bidirectional ? erasure_decode_bidirectional(C, w, opt) : erasure_decode_forward(C, w, opt);
        events += rep.initial_erasures;
        unrecovered += rep.unrecovered.size();
        recovered += rep.initial_erasures - rep.unrecovered.size();
        for (std::size_t t = 0; t < steps; ++t)
          for (std::size_t i = 0; i < C.n(); ++i)
            if (rep.recovered.steps[t][i] && *rep.recovered.steps[t][i] != sent.steps[t][i]) ++corrupted;
        if (rep.status == DecodeStatus::Complete)
          ++complete;
        else if (rep.status == DecodeStatus::Partial)
          ++partial;
        else
          ++failed;
      } else {
        const SymbolStream r = qsc_channel(sent, C.field(), si.eps, channel_seed);
        for (std::size_t t = 0; t < steps; ++t)
          for (std::size_t i = 0; i < C.n(); ++i) events += r.steps[t][i] != sent.steps[t][i];
        const ViterbiResult v = viterbi_decode(C, r, budgets);
        const SymbolStream got = stream_from_codeword(v.codeword, std::max<std::size_t>(steps, degree(v.codeword) + 1));
        bool same = got.steps.size() == steps;
        for (std::size_t t = 0; same && t < steps; ++t) same = got.steps[t] == sent.steps[t];
        ++(same ? correct : wrong);
      }
    }
    out << "code: " << source << '\n';
    out << "field: " << C.field()->literal() << '\n';
    out << "n: " << C.n() << '\n' << "k: " << C.k() << '\n' << "delta: " << C.degree() << '\n';
    out << "channel: " << si.channel << '\n';
    out << "seed: " << si.seed << '\n';
    out << "trials: " << si.trials << '\n';
    out << "message_degree: " << si.degree << '\n';
    out << "steps_per_trial: " << steps << '\n';
    out << "symbols: " << symbols << '\n';
    if (si.channel == "erase") {
      out << "rate: " << si.rate << '\n';
      out << "erasures: " << events << '\n';
      out << "recovered: " << recovered << '\n';
      out << "unrecovered: " << unrecovered << '\n';
      out << "corrupted: " << corrupted << '\n';
      out << "complete: " << complete << '\n' << "partial: " << partial << '\n' << "failed: " << failed << '\n';
      return corrupted == 0 ? 0 : 1;
    }
    out << "eps: " << si.eps << '\n';
    out << "symbol_errors: " << events << '\n';
    out << "decoded_correct: " << correct << '\n';
    out << "decoded_wrong: " << wrong << '\n';
    return 0;
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? 0 : 2;
  }
  try {
    for (auto& [sub, fn] : handlers)
      if (sub->parsed()) return fn();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace convkit::cli
