#include "unram/cli/app.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "unram/brauer/brauer.hpp"
#include "unram/catalog/codes.hpp"
#include "unram/catalog/families.hpp"
#include "unram/cli/criteria.hpp"
#include "unram/cli/group_file.hpp"
#include "unram/cohomology/cohomology.hpp"
#include "unram/cohomology/oracle.hpp"
#include "unram/errors.hpp"

#ifndef UNRAM_VERSION
#define UNRAM_VERSION "dev"
#endif

namespace unram::cli {

const char* version() { return UNRAM_VERSION; }

namespace {

using Json = nlohmann::ordered_json;
using brauer::FinAbGroup;
using exactla::Int;
using exactla::IntVector;
using group::GroupPtr;
using group::MatGroup;
using Clock = std::chrono::steady_clock;

struct Flags {
  std::string file, builtin, family;
  int n = -1;
  bool maximal_only = false, all_bicyclic = false, all_conjugates = false, no_preprocess = false;
  std::size_t b0_max_order = brauer::kB0MaxOrder;
  bool json = false, stable = false;
  // classify
  int k = -1;
  // reproduce
  std::string suite = "fast";
  int jobs = 1;
};

struct Source {
  Json descriptor;
  std::string label;
  GroupPtr group;
};

Source resolve(const Flags& f) {
  const int given = !f.file.empty() + !f.builtin.empty() + !f.family.empty();
  if (given != 1) throw InputError("exactly one of --file, --builtin, --family is required");
  Source s;
  if (!f.file.empty()) {
    GroupFile g = read_group_file(f.file);
    s.descriptor = {{"kind", "file"}, {"path", f.file}, {"name", g.name}};
    s.label = "file " + f.file;
    s.group = std::make_shared<const MatGroup>(close_group_file(g));
  } else if (!f.builtin.empty()) {
    s.descriptor = {{"kind", "builtin"}, {"name", f.builtin}};
    s.label = "builtin " + f.builtin;
    s.group = std::make_shared<const MatGroup>(catalog::builtin(f.builtin));
  } else {
    if (f.n < 0) throw InputError("--family requires --n");
    s.descriptor = {{"kind", "family"}, {"name", f.family}, {"n", f.n}};
    s.label = "family " + f.family + " n=" + std::to_string(f.n);
    s.group = std::make_shared<const MatGroup>(catalog::family(f.family, f.n));
  }
  return s;
}

brauer::H2uOptions h2u_options(const Flags& f) {
  if (f.maximal_only && f.all_bicyclic) throw InputError("--maximal-only and --all-bicyclic are exclusive");
  brauer::H2uOptions o;
  o.maximal_only = !f.all_bicyclic;
  o.conjugacy_reps = !f.all_conjugates;
  o.preprocess = !f.no_preprocess;
  return o;
}

Json options_json(const Flags& f) {
  brauer::H2uOptions o = h2u_options(f);
  return {{"maximal_only", o.maximal_only},
          {"conjugacy_reps", o.conjugacy_reps},
          {"preprocess", o.preprocess},
          {"b0_max_order", f.b0_max_order}};
}

Json int_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json vec_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

Json group_json(const FinAbGroup& g) { return {{"invariants", vec_json(g.invariants)}, {"spelling", g.to_string()}}; }
Json group_json(const IntVector& v) { return group_json(FinAbGroup::from_orders(v)); }

std::string seconds_text(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(3) << s;
  return o.str();
}

// Report assembly shared by the group commands.
struct Report {
  Report(const Flags& f, std::string c) : flags(f), command(std::move(c)) {}

  const Flags& flags;
  std::string command;
  Json result = Json::object();
  std::vector<std::pair<std::string, std::string>> lines;

  void line(const std::string& k, const std::string& v) { lines.push_back({k, v}); }

  void write(std::ostream& out, const Source* src, double secs) const {
    if (flags.json) {
      Json j;
      j["schema"] = 1;
      j["tool"] = "unram";
      j["version"] = version();
      j["command"] = command;
      if (src) {
        j["source"] = src->descriptor;
        j["group"] = {{"order", src->group->order()}, {"dimension", src->group->dim()}};
        j["options"] = options_json(flags);
      }
      j["result"] = result;
      if (!flags.stable) j["seconds"] = secs;
      out << j.dump(2) << '\n';
      return;
    }
    std::size_t w = 6;
    for (const auto& [k, v] : lines) w = std::max(w, k.size());
    auto emit = [&](const std::string& k, const std::string& v) {
      out << std::left << std::setw(static_cast<int>(w) + 2) << k << v << '\n';
    };
    if (src) {
      emit("source", src->label);
      emit("group", "order " + std::to_string(src->group->order()) + ", dimension " +
                        std::to_string(src->group->dim()));
    }
    for (const auto& [k, v] : lines) emit(k, v);
    if (!flags.stable) emit("time", seconds_text(secs) + " s");
  }
};

int cmd_group(const std::string& command, const Flags& f, std::ostream& out) {
  auto t0 = Clock::now();
  Source src = resolve(f);
  GLattice m(src.group);
  brauer::H2uOptions opt = h2u_options(f);
  Report r{f, command};
  int code = kExitOk;
  if (command == "h1") {
    IntVector v = cohomology::h1(m);
    r.result["h1"] = group_json(v);
    r.line("h1", FinAbGroup::from_orders(v).to_string());
  } else if (command == "hminus1") {
    IntVector v = cohomology::hminus1(m);
    r.result["hminus1"] = group_json(v);
    r.line("hminus1", FinAbGroup::from_orders(v).to_string());
  } else if (command == "h2") {
    cohomology::H2Data h = cohomology::h2(m, opt.preprocess);
    r.result["h2"] = group_json(h.invariants);
    Json cs = Json::array();
    for (const auto& z : h.gens_restricted) cs.push_back(vec_json(z));
    r.result["cocycles"] = cs;
    r.line("h2", FinAbGroup::from_orders(h.invariants).to_string());
  } else if (command == "h2nr") {
    brauer::H2uResult h = brauer::h2u(m, opt);
    r.result["h2"] = group_json(h.h2);
    r.result["h2u"] = group_json(h.h2u);
    Json gs = Json::array();
    for (const auto& g : h.generators) gs.push_back(vec_json(g));
    r.result["generators"] = gs;
    r.result["bicyclic_subgroups"] = h.subgroups;
    r.result["subgroups_used"] = h.subgroups_used;
    r.line("h2", h.h2.to_string());
    r.line("h2u", h.h2u.to_string());
    r.line("bicyclic", std::to_string(h.subgroups) + " subgroups, " + std::to_string(h.subgroups_used) + " used");
  } else if (command == "b0") {
    brauer::H2uResult h = brauer::b0(src.group, opt, f.b0_max_order);
    r.result["schur_multiplier"] = group_json(h.h2);
    r.result["b0"] = group_json(h.h2u);
    r.line("schur", h.h2.to_string());
    r.line("b0", h.h2u.to_string());
  } else if (command == "bru") {
    brauer::BrauerReport b = brauer::br_u(m, opt, f.b0_max_order);
    r.result["b0"] = b.b0 ? group_json(*b.b0) : Json(nullptr);
    r.result["h2u"] = group_json(b.h2u);
    r.result["br_u"] = group_json(b.combined);
    r.line("b0", b.b0 ? b.b0->to_string() : "skipped (|G| > " + std::to_string(f.b0_max_order) + ")");
    r.line("h2u", b.h2u.to_string());
    r.line("br_u", b.combined.to_string() + (b.b0 ? "" : " (lattice part only)"));
  } else if (command == "oracle") {
    IntVector a = cohomology::h2(m, opt.preprocess).invariants;
    cohomology::OracleResult o = cohomology::h2_oracle_report(m);
    const bool pass = a == o.invariants;
    r.result["h2"] = group_json(a);
    r.result["oracle"] = group_json(o.invariants);
    r.result["composition_checked"] = o.composition_checked;
    r.result["rank_certified"] = o.rank_certified;
    r.result["verdict"] = pass ? "PASS" : "FAIL";
    r.line("h2", FinAbGroup::from_orders(a).to_string());
    r.line("oracle", FinAbGroup::from_orders(o.invariants).to_string());
    r.line("verdict", pass ? "PASS" : "FAIL");
    if (!pass) code = kExitInput;
  }
  r.write(out, &src, std::chrono::duration<double>(Clock::now() - t0).count());
  return code;
}

Json trace_json(const catalog::TraceVector& t) {
  Json a = Json::array();
  for (auto x : t) a.push_back(x);
  return a;
}

int cmd_classify(const Flags& f, std::ostream& out) {
  auto t0 = Clock::now();
  if (f.n < 1 || f.n > 7) throw InputError("classify: --n must be in 1..7");
  if (f.k != -1 && (f.k < 0 || f.k > f.n)) throw InputError("classify: --k must be in 0..n");
  catalog::C2kReport rep = catalog::classify_c2k(f.n);
  Report r{f, "classify"};
  r.result["n"] = f.n;
  Json levels = Json::array(), classes = Json::array();
  for (int k = 0; k <= f.n; ++k) {
    if (f.k != -1 && k != f.k) continue;
    if (f.k == -1 && k == 0) continue;
    Json split = Json::array();
    for (const auto& [tv, keys] : catalog::split_trace_classes(rep, k)) split.push_back(trace_json(tv));
    levels.push_back({{"k", k},
                      {"subspaces", rep.subspaces[k]},
                      {"classes", rep.orbits[k]},
                      {"trace_classes", rep.trace_classes[k]},
                      {"key_classes", rep.key_classes[k]},
                      {"split_traces", split}});
    r.line("k=" + std::to_string(k), std::to_string(rep.orbits[k]) + " classes, " +
                                         std::to_string(rep.trace_classes[k]) + " trace vectors, " +
                                         std::to_string(rep.subspaces[k]) + " subspaces");
  }
  for (const auto& c : rep.classes) {
    if (f.k != -1 && c.k != f.k) continue;
    if (f.k == -1 && c.k == 0) continue;
    Json t = Json::object();
    for (const auto& [trace, vals] : c.t) t[std::to_string(trace)] = vals;
    classes.push_back({{"k", c.k},
                       {"trace", trace_json(c.trace)},
                       {"t", t},
                       {"representative", c.representative.words},
                       {"orbit_size", c.orbit_size}});
  }
  r.result["levels"] = levels;
  r.result["classes"] = classes;
  {
    std::string counts;
    for (const auto& l : levels) counts += (counts.empty() ? "" : ",") + std::to_string(l["classes"].get<std::size_t>());
    r.line("counts", counts);
  }
  r.write(out, nullptr, std::chrono::duration<double>(Clock::now() - t0).count());
  return kExitOk;
}

int cmd_reproduce(const Flags& f, std::ostream& out) {
  auto t0 = Clock::now();
  Suite suite;
  if (f.suite == "fast") suite = Suite::fast;
  else if (f.suite == "full") suite = Suite::full;
  else throw InputError("--suite must be fast or full");
  if (f.jobs < 1) throw InputError("--jobs must be positive");
  std::vector<CriterionResult> rows = run_criteria(suite, f.jobs);
  bool ok = true;
  for (const auto& r : rows) ok = ok && (r.skipped || r.passed);

  if (f.json) {
    Json j;
    j["schema"] = 1;
    j["tool"] = "unram";
    j["version"] = version();
    j["command"] = "reproduce";
    Json rs = Json::array();
    for (const auto& r : rows) {
      Json row = {{"id", r.id},
                  {"title", r.title},
                  {"status", r.skipped ? "skipped" : r.passed ? "pass" : "fail"},
                  {"detail", f.stable ? r.stable_detail : r.detail},
                  {"budget_seconds", r.budget_seconds}};
      if (!f.stable) row["seconds"] = r.seconds;
      rs.push_back(row);
    }
    j["result"] = {{"suite", f.suite}, {"passed", ok}, {"rows", rs}};
    if (!f.stable) j["seconds"] = std::chrono::duration<double>(Clock::now() - t0).count();
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : rows) {
      out << std::right << std::setw(2) << r.id << "  " << std::left << std::setw(5)
          << (r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL");
      if (!f.stable) out << std::right << std::setw(9) << seconds_text(r.seconds) << "s";
      out << "  " << r.title << "\n      " << (f.stable ? r.stable_detail : r.detail) << '\n';
    }
    out << (ok ? "all criteria passed" : "some criteria FAILED") << " (suite " << f.suite << ")\n";
  }
  return ok ? kExitOk : kExitInput;
}

int cmd_emit(const Flags& f, std::ostream& out) {
  Source src = resolve(f);
  std::string name = src.descriptor.value("name", std::string());
  if (src.descriptor["kind"] == "family") name += "_" + std::to_string(f.n);
  GroupFile g;
  if (!f.file.empty()) g = read_group_file(f.file);
  else g = group_file_of(*src.group, name);
  out << emit_group_file(g);
  return kExitOk;
}

void add_source(CLI::App* c, Flags& f) {
  c->add_option("--file", f.file, "group file");
  c->add_option("--builtin", f.builtin, "builtin group name");
  c->add_option("--family", f.family, "family name (d4n, qd8n, q8n, cp2p)");
  c->add_option("--n,--p", f.n, "family parameter");
}

void add_cohomology_flags(CLI::App* c, Flags& f) {
  c->add_flag("--maximal-only", f.maximal_only, "use maximal bicyclic subgroups (default)");
  c->add_flag("--all-bicyclic", f.all_bicyclic, "use every bicyclic subgroup");
  c->add_flag("--all-conjugates", f.all_conjugates, "keep every conjugate subgroup");
  c->add_flag("--no-preprocess", f.no_preprocess, "skip unit-pivot elimination");
  c->add_option("--b0-max-order", f.b0_max_order, "largest |G| for B0")->check(CLI::PositiveNumber);
}

void add_output_flags(CLI::App* c, Flags& f) {
  c->add_flag("--json", f.json, "structured output");
  c->add_flag("--stable", f.stable, "omit timings");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unramified Brauer groups of multiplicative invariant fields", "unram"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);
  Flags f;

  const std::vector<std::pair<std::string, std::string>> group_cmds{
      {"h1", "H^1(G, M)"},
      {"hminus1", "Tate H^-1(G, M)"},
      {"h2", "H^2(G, M)"},
      {"h2nr", "H^2_u(G, M), the classes vanishing on bicyclic subgroups"},
      {"b0", "Bogomolov multiplier B0(G)"},
      {"bru", "B0(G) + H^2_u(G, M)"},
      {"oracle", "compare H^2 with the bar-complex oracle"},
  };
  for (const auto& [name, desc] : group_cmds) {
    CLI::App* c = app.add_subcommand(name, desc);
    add_source(c, f);
    add_cohomology_flags(c, f);
    add_output_flags(c, f);
  }
  CLI::App* emit = app.add_subcommand("emit", "print the canonical group file of a source");
  add_source(emit, f);

  CLI::App* classify = app.add_subcommand("classify", "classes of (C2)^k in the sign group of rank n");
  classify->add_option("--n", f.n, "rank, 1..7")->required();
  classify->add_option("--k", f.k, "only this k");
  add_output_flags(classify, f);

  CLI::App* reproduce = app.add_subcommand("reproduce", "run the acceptance matrix");
  reproduce->add_option("--suite", f.suite, "fast or full");
  reproduce->add_option("--jobs", f.jobs, "parallel rows");
  add_output_flags(reproduce, f);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "classify") return cmd_classify(f, out);
    if (name == "reproduce") return cmd_reproduce(f, out);
    if (name == "emit") return cmd_emit(f, out);
    return cmd_group(name, f, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::budget ? kExitBudget : kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace unram::cli
