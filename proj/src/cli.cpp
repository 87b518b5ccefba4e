#include "toric/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "toric/characters.hpp"
#include "toric/cohomology.hpp"
#include "toric/fixtures.hpp"
#include "toric/json_io.hpp"
#include "toric/pushforward.hpp"

namespace toric {

namespace {

// ---------------------------------------------------------------------------
// Plumbing

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

void emit_error(std::ostream& err, const std::string& kind, const std::string& detail) {
  Json e;
  e["error"] = kind;
  e["detail"] = detail;
  err << e.dump() << "\n";
}

// Fibre degrees are reported at the width of the kernel lattice: rank 0 as
// the number 0, rank 1 as a bare integer, higher ranks as arrays.
Json mu_to_json(const IntVec& mu) {
  if (mu.empty()) return Json(0);
  if (mu.size() == 1) return int_to_json(mu[0]);
  return intvec_to_json(mu);
}

// Runs fn(0..njobs-1), each job exactly once, on up to nthreads workers.
// Callers index their results by job, so the output order is independent of
// the scheduling; the lowest-indexed failure is rethrown deterministically.
void parallel_for(int nthreads, int njobs, const std::function<void(int)>& fn) {
  if (nthreads <= 1 || njobs <= 1) {
    for (int k = 0; k < njobs; ++k) fn(k);
    return;
  }
  std::vector<std::exception_ptr> errors;
  errors.resize(std::size_t(njobs));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k; (k = next.fetch_add(1)) < njobs;) {
      try {
        fn(k);
      } catch (...) {
        errors[std::size_t(k)] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const int workers = std::min(nthreads, njobs);
  pool.reserve(std::size_t(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

int default_thread_count() {
  if (const char* env = std::getenv("TORIC_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return std::min(v, 64);
  }
  return 1;
}

// ---------------------------------------------------------------------------
// Input resolution

struct InputFlags {
  std::string fixture;
  std::string fan_file;
  std::string morphism_file;
  std::string divisor_text;
};

struct LoadedInput {
  std::optional<ToricMorphism> phi;
  Fan fan;  // the fan itself, or the morphism's source fan
  IntVec default_divisor;
};

void add_input_flags(CLI::App* sub, InputFlags& flags, bool with_divisor) {
  auto* fx = sub->add_option("--fixture", flags.fixture, "built-in example name (see `fixtures`)");
  auto* fan = sub->add_option("--fan", flags.fan_file, "path to a fan JSON file");
  auto* mor = sub->add_option("--morphism", flags.morphism_file, "path to a morphism JSON file");
  fx->excludes(fan)->excludes(mor);
  fan->excludes(mor);
  if (with_divisor)
    sub->add_option("--divisor", flags.divisor_text,
                    "divisor coefficients as a JSON array, one per ray");
}

LoadedInput load_input(const InputFlags& flags) {
  const int given = int(!flags.fixture.empty()) + int(!flags.fan_file.empty()) +
                    int(!flags.morphism_file.empty());
  if (given != 1)
    throw InvalidInputError("specify exactly one of --fixture, --fan, --morphism");
  LoadedInput in;
  if (!flags.fixture.empty()) {
    const Fixture* fx = find_fixture(flags.fixture);
    if (!fx)
      throw InvalidInputError("unknown fixture \"" + flags.fixture +
                              "\"; run the `fixtures` subcommand for the list");
    in.fan = fx->fan;
    if (fx->has_morphism) in.phi = fx->phi;
    in.default_divisor = fx->divisor;
  } else if (!flags.fan_file.empty()) {
    in.fan = fan_from_json(parse_json(read_file(flags.fan_file), flags.fan_file));
  } else {
    in.phi = morphism_from_json(parse_json(read_file(flags.morphism_file), flags.morphism_file));
    in.fan = in.phi->source;
  }
  return in;
}

const ToricMorphism& require_morphism(const LoadedInput& in, const std::string& subcommand) {
  if (!in.phi)
    throw InvalidInputError("`" + subcommand +
                            "` needs a fibration: pass --morphism or a fibration fixture");
  return *in.phi;
}

IntVec resolve_divisor(const LoadedInput& in, const InputFlags& flags) {
  IntVec d;
  if (!flags.divisor_text.empty()) {
    d = intvec_from_json(parse_json(flags.divisor_text, "--divisor"), "--divisor");
  } else if (!in.default_divisor.empty()) {
    d = in.default_divisor;
  } else {
    throw InvalidInputError("--divisor is required (one integer per ray of the fan)");
  }
  if (d.size() != in.fan.rays.size())
    throw InvalidInputError("divisor has length " + std::to_string(d.size()) + ", expected " +
                            std::to_string(in.fan.rays.size()) + " (one entry per ray)");
  return d;
}

// ---------------------------------------------------------------------------
// Report builders

Json fan_report_json(const FanReport& r) {
  Json j;
  j["valid"] = r.valid;
  j["smooth"] = r.smooth;
  j["complete"] = r.complete;
  j["errors"] = r.errors;
  return j;
}

Json morphism_report_json(const MorphismReport& r) {
  Json j;
  j["lattice_ok"] = r.lattice_ok;
  j["maps_cones"] = r.maps_cones;
  j["proper"] = r.proper;
  j["surjective"] = r.surjective;
  j["fibration"] = r.fibration;
  j["notes"] = r.notes;
  return j;
}

Json cover_report_json(const CoverReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["d2_zero"] = r.d2_zero;
  j["p1"] = r.p1;
  j["p2"] = r.p2;
  j["p3_violations"] = r.p3_violations;
  j["p4_violations"] = r.p4_violations;
  j["f_vector"] = intvec_to_json(r.f_vec);
  return j;
}

// ---------------------------------------------------------------------------
// Subcommand: fixtures

int cmd_fixtures(std::ostream& out) {
  Json list = Json::array();
  for (const Fixture& fx : all_fixtures()) {
    Json j;
    j["name"] = fx.name;
    j["kind"] = fx.has_morphism ? "fibration" : "fan";
    j["summary"] = fx.summary;
    j["n"] = fx.fan.n;
    j["rays"] = fx.fan.rays.size();
    if (fx.has_morphism) {
      j["target_n"] = fx.phi.target.n;
      j["target_rays"] = fx.phi.target.rays.size();
      j["default_divisor"] = intvec_to_json(fx.divisor);
    }
    list.push_back(j);
  }
  emit(out, list);
  return 0;
}

// ---------------------------------------------------------------------------
// Subcommand: validate

int cmd_validate(const InputFlags& flags, std::ostream& out, std::ostream& err) {
  const LoadedInput in = load_input(flags);
  if (!flags.divisor_text.empty()) resolve_divisor(in, flags);  // length check only
  if (in.phi) {
    const FanReport src = validate_fan(in.phi->source);
    const FanReport tgt = validate_fan(in.phi->target);
    MorphismReport mor;
    if (src.valid && tgt.valid) mor = validate_morphism(*in.phi);
    const bool ok = src.valid && tgt.valid && mor.lattice_ok && mor.maps_cones;
    Json j;
    j["valid"] = ok;
    j["source"] = fan_report_json(src);
    j["target"] = fan_report_json(tgt);
    j["morphism"] = morphism_report_json(mor);
    emit(out, j);
    if (!ok) {
      std::string detail = "morphism failed validation";
      if (!src.errors.empty())
        detail = "source fan: " + src.errors.front();
      else if (!tgt.errors.empty())
        detail = "target fan: " + tgt.errors.front();
      else if (!mor.notes.empty())
        detail = mor.notes.front();
      emit_error(err, "InvalidInput", detail);
      return 1;
    }
    return 0;
  }
  const FanReport r = validate_fan(in.fan);
  emit(out, fan_report_json(r));
  if (!r.valid) {
    emit_error(err, "InvalidInput",
               r.errors.empty() ? "fan failed validation" : r.errors.front());
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Subcommand: check-cover

int cmd_check_cover(const InputFlags& flags, std::ostream& out, std::ostream& err) {
  const LoadedInput in = load_input(flags);
  bool ok;
  Json j;
  std::string detail;
  auto first_violation = [](const CoverReport& r) -> std::string {
    if (!r.d2_zero) return "coboundary does not square to zero";
    if (!r.p1) return "cell/cone bijection violated";
    if (!r.p2) return "dimension bookkeeping violated";
    if (!r.p3_violations.empty()) return r.p3_violations.front();
    if (!r.p4_violations.empty()) return r.p4_violations.front();
    return "cover axioms violated";
  };
  if (in.phi) {
    const CoverReport src = verify_cover_axioms(build_P(in.phi->source), in.phi->source);
    const CoverReport tgt = verify_cover_axioms(build_P(in.phi->target), in.phi->target);
    ok = src.pass && tgt.pass;
    j["pass"] = ok;
    j["source"] = cover_report_json(src);
    j["target"] = cover_report_json(tgt);
    detail = !src.pass ? "source: " + first_violation(src)
                       : (!tgt.pass ? "target: " + first_violation(tgt) : "");
  } else {
    const CoverReport r = verify_cover_axioms(build_P(in.fan), in.fan);
    ok = r.pass;
    j = cover_report_json(r);
    if (!ok) detail = first_violation(r);
  }
  emit(out, j);
  if (!ok) {
    emit_error(err, "CoverAxioms", detail);
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Subcommand: cohomology

int cmd_cohomology(const InputFlags& flags, std::ostream& out) {
  const LoadedInput in = load_input(flags);
  const IntVec d = resolve_divisor(in, flags);
  const CohomologyTable table = h_i(in.fan, d);

  Json j;
  j["h"] = intvec_to_json(table.h);
  std::map<IntVec, IntVec> by_degree;  // character -> ranks per cohomological index
  for (std::size_t i = 0; i < table.degrees.size(); ++i)
    for (const auto& [m, rank] : table.degrees[i]) {
      if (rank == 0) continue;
      auto [it, fresh] = by_degree.try_emplace(m, zero_vec(int(table.h.size())));
      (void)fresh;
      it->second[i] += rank;
    }
  Json degrees = Json::object();
  for (const auto& [m, ranks] : by_degree)
    degrees[intvec_to_json(m).dump()] = intvec_to_json(ranks);
  j["degrees"] = degrees;
  emit(out, j);
  return 0;
}

// ---------------------------------------------------------------------------
// Subcommand: characters

int cmd_characters(const InputFlags& flags, int i, std::ostream& out) {
  const LoadedInput in = load_input(flags);
  const ToricMorphism& phi = require_morphism(in, "characters");
  const IntVec d = resolve_divisor(in, flags);
  const std::vector<DivisorPair> pairs = divisor_pairs(phi, d, i);

  Json j;
  Json c = Json::array();
  for (const DivisorPair& p : pairs) c.push_back(mu_to_json(p.mu));
  j["C"] = c;
  Json pj = Json::array();
  for (const DivisorPair& p : pairs) {
    Json e;
    e["mu"] = mu_to_json(p.mu);
    e["D"] = intvec_to_json(p.d_mu);
    e["E"] = intvec_to_json(p.e_mu);
    pj.push_back(e);
  }
  j["pairs"] = pj;
  emit(out, j);
  return 0;
}

// ---------------------------------------------------------------------------
// Subcommand: hdi

std::vector<IntVec> default_degree_grid(int rank) {
  std::vector<IntVec> grid;
  if (rank == 0) {
    grid.push_back({});
  } else if (rank == 1) {
    for (int v = -2; v <= 6; ++v) grid.push_back({Int(v)});
  } else if (rank == 2) {
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b) grid.push_back({Int(a), Int(b)});
  } else {
    throw InvalidInputError("target class rank is " + std::to_string(rank) +
                            "; pass --degree-grid explicitly");
  }
  return grid;
}

std::vector<IntVec> parse_degree_grid(const std::string& text, int rank) {
  const Json j = parse_json(text, "--degree-grid");
  if (!j.is_array() || j.empty())
    throw InvalidInputError("--degree-grid must be a non-empty JSON array of class vectors");
  std::vector<IntVec> grid;
  for (std::size_t k = 0; k < j.size(); ++k) {
    IntVec cls = intvec_from_json(j[k], "--degree-grid[" + std::to_string(k) + "]");
    if (int(cls.size()) != rank)
      throw InvalidInputError("--degree-grid[" + std::to_string(k) + "] has length " +
                              std::to_string(cls.size()) + ", expected class rank " +
                              std::to_string(rank));
    grid.push_back(std::move(cls));
  }
  return grid;
}

std::string monomial_string(const IntVec& f) {
  std::string s;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += "y" + std::to_string(k);
    if (f[k] != 1) s += "^" + f[k].str();
  }
  return s.empty() ? "1" : s;
}

std::string ideal_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string s = "<";
  for (std::size_t k = 0; k < ideal.gens.size(); ++k) {
    if (k) s += ", ";
    s += monomial_string(ideal.gens[k]);
  }
  return s + ">";
}

std::string tuple_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += v[k].str();
  }
  return s + ")";
}

std::string cone_string(const Cone& c) {
  std::string s = "{";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(c[k]);
  }
  return s + "}";
}

void print_hdi_table(std::ostream& out, const IdealComplex& ic,
                     const std::vector<IntVec>& grid,
                     const std::vector<std::vector<Int>>& block_values,
                     const std::vector<std::vector<std::pair<IntVec, Int>>>& block_gens,
                     int gen_box) {
  out << "direct image R^" << ic.i << " as a graded module over " << ic.cg.rank
      << " class variable(s); " << ic.blocks.size() << " fibre degree component(s)\n";
  for (std::size_t bi = 0; bi < ic.blocks.size(); ++bi) {
    const MuBlock& b = ic.blocks[bi];
    out << "\ncomponent mu = " << tuple_string(b.mu) << "\n";
    out << "  twisted divisor " << tuple_string(b.d_mu) << ", effective shift "
        << tuple_string(b.e_mu) << " of class " << tuple_string(b.e_class) << "\n";
    for (int dim = 0; dim <= ic.p.n; ++dim) {
      out << "  dim " << dim << " cells\n";
      for (int c = ic.p.dim_offset[std::size_t(dim)]; c < ic.p.dim_offset[std::size_t(dim) + 1];
           ++c)
        out << "    " << cone_string(ic.p.cells[std::size_t(c)]) << " : "
            << ideal_string(b.ideals[std::size_t(c)]) << "\n";
    }
    out << "  Hilbert values\n";
    for (std::size_t g = 0; g < grid.size(); ++g)
      out << "    class " << tuple_string(grid[g]) << " : " << block_values[g][bi].str() << "\n";
    out << "  generators within exponent box " << gen_box << "\n";
    if (block_gens[bi].empty()) out << "    (none)\n";
    for (const auto& [f, count] : block_gens[bi])
      out << "    fine degree " << tuple_string(f) << " : " << count.str() << "\n";
  }
  out << "\ntotal Hilbert values\n";
  for (std::size_t g = 0; g < grid.size(); ++g) {
    Int total = 0;
    for (const Int& v : block_values[g]) total += v;
    out << "  class " << tuple_string(grid[g]) << " : " << total.str() << "\n";
  }
}

int cmd_hdi(const InputFlags& flags, int i, const std::string& grid_text, int gen_box,
            bool want_table, bool want_bases, int threads, std::ostream& out) {
  const LoadedInput in = load_input(flags);
  const ToricMorphism& phi = require_morphism(in, "hdi");
  const IntVec d = resolve_divisor(in, flags);
  if (gen_box < 0) throw InvalidInputError("--gen-box must be >= 0");

  const IdealComplex ic = build_complex(phi, d, i);
  const std::vector<IntVec> grid = grid_text.empty() ? default_degree_grid(ic.cg.rank)
                                                     : parse_degree_grid(grid_text, ic.cg.rank);

  // Hilbert values per (grid class, block); grid classes are independent jobs.
  std::vector<std::vector<Int>> block_values(grid.size(),
                                             std::vector<Int>(ic.blocks.size(), Int(0)));
  parallel_for(threads, int(grid.size()), [&](int g) {
    for (std::size_t bi = 0; bi < ic.blocks.size(); ++bi)
      block_values[std::size_t(g)][bi] = hilbert_block_at(ic, ic.blocks[bi], grid[std::size_t(g)]);
  });

  std::vector<std::vector<std::pair<IntVec, Int>>> block_gens(ic.blocks.size());
  for (std::size_t bi = 0; bi < ic.blocks.size(); ++bi)
    block_gens[bi] = minimal_generators(ic, ic.blocks[bi], gen_box);

  if (want_table) {
    print_hdi_table(out, ic, grid, block_values, block_gens, gen_box);
    return 0;
  }

  Json j;
  j["i"] = i;
  j["class_rank"] = ic.cg.rank;
  Json c = Json::array();
  for (const MuBlock& b : ic.blocks) c.push_back(mu_to_json(b.mu));
  j["C"] = c;
  Json gj = Json::array();
  for (const IntVec& cls : grid) gj.push_back(intvec_to_json(cls));
  j["degree_grid"] = gj;
  Json blocks = Json::array();
  for (std::size_t bi = 0; bi < ic.blocks.size(); ++bi) {
    const MuBlock& b = ic.blocks[bi];
    Json bj;
    bj["mu"] = mu_to_json(b.mu);
    bj["D_mu"] = intvec_to_json(b.d_mu);
    bj["E_mu"] = intvec_to_json(b.e_mu);
    bj["E_class"] = intvec_to_json(b.e_class);
    Json hv = Json::array();
    for (std::size_t g = 0; g < grid.size(); ++g) hv.push_back(int_to_json(block_values[g][bi]));
    bj["hilbert"] = hv;
    Json gens = Json::array();
    for (const auto& [f, count] : block_gens[bi]) {
      Json gjn;
      gjn["degree"] = intvec_to_json(f);
      gjn["count"] = int_to_json(count);
      gens.push_back(gjn);
    }
    bj["generators"] = gens;
    if (want_bases) {
      Json bases = Json::array();
      for (const IntVec& cls : grid) {
        Json at_class = Json::array();
        for (const IntVec& f : monomials_of_class(ic.phi.target, ic.cg, add(cls, b.e_class))) {
          const Int rank = fine_cohomology(ic, b, f)[std::size_t(ic.i)];
          if (rank == 0) continue;
          Json entry;
          entry["monomial"] = intvec_to_json(f);
          entry["rank"] = int_to_json(rank);
          at_class.push_back(entry);
        }
        bases.push_back(at_class);
      }
      bj["bases"] = bases;
    }
    blocks.push_back(bj);
  }
  j["blocks"] = blocks;
  Json totals = Json::array();
  for (std::size_t g = 0; g < grid.size(); ++g) {
    Int total = 0;
    for (const Int& v : block_values[g]) total += v;
    totals.push_back(int_to_json(total));
  }
  j["hilbert"] = totals;
  emit(out, j);
  return 0;
}

}  // namespace

// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact sheaf cohomology and fibration pushforwards for smooth complete "
               "toric varieties"};
  app.require_subcommand(1);

  CLI::App* sub_fixtures = app.add_subcommand("fixtures", "list the built-in examples");

  InputFlags v_flags;
  CLI::App* sub_validate =
      app.add_subcommand("validate", "validate a fan or morphism and classify it");
  add_input_flags(sub_validate, v_flags, true);

  InputFlags cc_flags;
  CLI::App* sub_cover = app.add_subcommand(
      "check-cover", "verify the cell-complex axioms of the nonnegative part");
  add_input_flags(sub_cover, cc_flags, false);

  InputFlags coh_flags;
  CLI::App* sub_coh = app.add_subcommand(
      "cohomology", "graded sheaf cohomology of a divisor (morphisms use the source fan)");
  add_input_flags(sub_coh, coh_flags, true);

  InputFlags ch_flags;
  int ch_i = 1;
  CLI::App* sub_ch = app.add_subcommand(
      "characters", "contributing fibre degrees and the local divisor data of a pushforward");
  add_input_flags(sub_ch, ch_flags, true);
  sub_ch->add_option("--i", ch_i, "cohomological degree (default 1)")->check(CLI::NonNegativeNumber);

  InputFlags hdi_flags;
  int hdi_i = 1;
  std::string grid_text;
  int gen_box = 6;
  bool want_table = false;
  bool want_bases = false;
  int threads = default_thread_count();
  CLI::App* sub_hdi = app.add_subcommand(
      "hdi", "higher direct image of a divisor as a finitely presented graded module");
  add_input_flags(sub_hdi, hdi_flags, true);
  sub_hdi->add_option("--i", hdi_i, "cohomological degree (default 1)")
      ->check(CLI::NonNegativeNumber);
  sub_hdi->add_option("--degree-grid", grid_text,
                      "JSON list of class vectors at which to evaluate the Hilbert function");
  sub_hdi->add_option("--gen-box", gen_box, "exponent bound for the generator search (default 6)");
  sub_hdi->add_flag("--table", want_table, "print a human-readable table instead of JSON");
  sub_hdi->add_flag("--bases", want_bases, "include per-degree monomial bases in the report");
  sub_hdi->add_option("--threads", threads,
                      "worker threads for Hilbert evaluation (default $TORIC_THREADS or 1)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("toric");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "Usage", e.what());
    return 1;
  }

  try {
    if (app.got_subcommand(sub_fixtures)) return cmd_fixtures(out);
    if (app.got_subcommand(sub_validate)) return cmd_validate(v_flags, out, err);
    if (app.got_subcommand(sub_cover)) return cmd_check_cover(cc_flags, out, err);
    if (app.got_subcommand(sub_coh)) return cmd_cohomology(coh_flags, out);
    if (app.got_subcommand(sub_ch)) return cmd_characters(ch_flags, ch_i, out);
    if (app.got_subcommand(sub_hdi))
      return cmd_hdi(hdi_flags, hdi_i, grid_text, gen_box, want_table, want_bases,
                     std::max(1, std::min(threads, 64)), out);
  } catch (const Error& e) {
    emit_error(err, e.kind(), e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_error(err, "Internal", e.what());
    return 1;
  }
  emit_error(err, "Usage", "no subcommand given");
  return 1;
}

}  // namespace toric
