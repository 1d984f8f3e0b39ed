#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "vcvis/cuts.hpp"
#include "vcvis/error.hpp"
#include "vcvis/render.hpp"
#include "vcvis/scenario.hpp"
#include "vcvis/shattering.hpp"
#include "vcvis/visibility.hpp"

using namespace vcvis;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

Json point_json(const ExactPoint& p) {
  return Json::array({format_rational(p.x), format_rational(p.y)});
}

Json segment_json(const Segment& s) { return Json::array({point_json(s.a), point_json(s.b)}); }

Json signature_json(Signature s) { return Json(signature_labels(s)); }

Json cut_ref_json(const CutRef& ref) {
  Json j;
  j["cut"] = ref.cut;
  if (ref.direction) j["direction"] = std::string(to_string(*ref.direction));
  return j;
}

ExactPoint parse_point(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw Error(ErrorCode::kParseError, "expected X,Y but got \"" + text + "\"");
  }
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

unsigned default_threads() { return std::max(1U, std::thread::hardware_concurrency()); }

int cmd_validate(const Scenario& s) {
  Json j;
  j["name"] = s.name;
  j["metric"] = std::string(to_string(s.metric));
  j["valid"] = true;
  j["vertices"] = s.polygon.size();
  j["generalPosition"] = s.polygon.general_position();
  j["area"] = format_rational(polygon_area(s.polygon));
  j["points"] = s.points.size();
  emit(j);
  return 0;
}

int cmd_cuts(const Scenario& s) {
  Json cuts = Json::array();
  for (const L1Cut& cut : extract_cuts(s.polygon)) {
    Json c;
    c["id"] = cut.id;
    c["direction"] = std::string(to_string(cut.label));
    c["axis"] = std::string(to_string(cut.axis));
    c["feature"] = {{"type", cut.feature.type == EvokingFeature::Type::kVertex ? "vertex" : "edge"},
                    {"index", cut.feature.index},
                    {"kind", std::string(to_string(cut.feature.kind))}};
    Json chords = Json::array();
    for (const Segment& seg : cut.chords) chords.push_back(segment_json(seg));
    c["chords"] = std::move(chords);
    c["merged"] = cut.merged.size();
    cuts.push_back(std::move(c));
  }
  Json j;
  j["name"] = s.name;
  j["cutCount"] = cuts.size();
  j["cuts"] = std::move(cuts);
  emit(j);
  return 0;
}

int cmd_faces(const Scenario& s) {
  FaceDecomposition dec = decompose(s.polygon, s.metric, s.points);
  Json faces = Json::array();
  for (std::size_t i = 0; i < dec.faces.size(); ++i) {
    const Face& f = dec.faces[i];
    Json boundary = Json::array();
    for (const auto& p : f.boundary.vertices()) boundary.push_back(point_json(p));
    Json incident = Json::array();
    for (const CutRef& ref : f.incident) incident.push_back(cut_ref_json(ref));
    faces.push_back({{"index", i},
                     {"representative", point_json(f.representative)},
                     {"boundary", std::move(boundary)},
                     {"incident", std::move(incident)}});
  }
  Json adjacency = Json::array();
  for (const Adjacency& adj : dec.adjacency) {
    Json cuts = Json::array();
    for (const CutRef& ref : adj.cuts) cuts.push_back(cut_ref_json(ref));
    adjacency.push_back({{"a", adj.a},
                         {"b", adj.b},
                         {"segment", segment_json(adj.segment)},
                         {"cuts", std::move(cuts)}});
  }
  Json j;
  j["name"] = s.name;
  j["metric"] = std::string(to_string(s.metric));
  j["faceCount"] = dec.faces.size();
  j["faces"] = std::move(faces);
  j["adjacency"] = std::move(adjacency);
  emit(j);
  return 0;
}

int cmd_signatures(const Scenario& s, unsigned threads) {
  FaceDecomposition dec =
      signature_map(s.polygon, s.points, s.metric, {threads, /*midpoint_signatures=*/false});
  Json faces = Json::array();
  for (std::size_t i = 0; i < dec.faces.size(); ++i) {
    faces.push_back({{"index", i},
                     {"representative", point_json(dec.faces[i].representative)},
                     {"signature", signature_json(dec.faces[i].signature)}});
  }
  Json achieved = Json::array();
  for (Signature sig : dec.achieved) achieved.push_back(signature_json(sig));
  Json j;
  j["name"] = s.name;
  j["metric"] = std::string(to_string(s.metric));
  j["points"] = s.points.size();
  j["faces"] = std::move(faces);
  j["signatureCount"] = dec.achieved.size();
  j["achieved"] = std::move(achieved);
  emit(j);
  return 0;
}

int cmd_visible(const Scenario& s, const std::string& from, const std::string& to,
                const std::string& metric_text) {
  Metric metric = metric_text.empty() ? s.metric : parse_metric(metric_text);
  ExactPoint p = parse_point(from), q = parse_point(to);
  for (const ExactPoint* x : {&p, &q}) {
    if (!inside_closed(s.polygon, *x)) {
      std::ostringstream msg;
      msg << *x << " is outside the polygon";
      throw Error(ErrorCode::kPointOutsidePolygon, msg.str());
    }
  }
  Json j;
  j["from"] = point_json(p);
  j["to"] = point_json(q);
  j["metric"] = std::string(to_string(metric));
  j["visible"] = metric == Metric::kL1 ? l1_visible(s.polygon, p, q) : l2_visible(s.polygon, p, q);
  emit(j);
  return 0;
}

int cmd_shatter(const Scenario& s, unsigned threads) {
  ShatterReport r = shatter_check(s.polygon, s.points, s.metric, {threads, false});
  Json achieved = Json::array();
  for (Signature sig : r.achieved) achieved.push_back(signature_json(sig));
  Json witnesses = Json::array();
  for (const auto& [sig, p] : r.witnesses) {
    witnesses.push_back({{"signature", signature_json(sig)},
                         {"face", r.witness_faces.at(sig)},
                         {"point", point_json(p)}});
  }
  Json missing = Json::array();
  for (Signature sig : r.missing) missing.push_back(signature_json(sig));
  Json j;
  j["name"] = s.name;
  j["metric"] = std::string(to_string(s.metric));
  j["points"] = r.point_count;
  j["shattered"] = r.shattered;
  j["signatureCount"] = r.achieved.size();
  j["achieved"] = std::move(achieved);
  j["witnesses"] = std::move(witnesses);
  j["missing"] = std::move(missing);
  bool match = true;
  if (s.expected.shattered || s.expected.signature_count) {
    Json e;
    if (s.expected.shattered) {
      e["shattered"] = *s.expected.shattered;
      match = match && *s.expected.shattered == r.shattered;
    }
    if (s.expected.signature_count) {
      e["signatureCount"] = *s.expected.signature_count;
      match = match &&
              static_cast<std::size_t>(*s.expected.signature_count) == r.achieved.size();
    }
    e["match"] = match;
    j["expected"] = std::move(e);
  }
  emit(j);
  return match ? 0 : kExitMismatch;
}

Json lemma_json(const LemmaReport& r) {
  Json j;
  j["lemma"] = r.lemma;
  j["applicable"] = r.applicable;
  j["holds"] = r.holds;
  j["detail"] = r.detail;
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

int cmd_verify(const Scenario& s, const std::string& which, unsigned threads) {
  FaceDecomposition dec = signature_map(s.polygon, s.points, s.metric, {threads, true});
  const std::size_t n = s.points.size();
  std::vector<LemmaReport> reports;
  if (which == "1" || which == "all") reports.push_back(verify_lemma1(dec, n));
  if (which == "2" || which == "all") reports.push_back(verify_lemma2(dec, n));
  if (which == "3" || which == "all") {
    if (s.metric == Metric::kL1) {
      reports.push_back(verify_direction_bound(dec, n));
    } else {
      LemmaReport r;
      r.lemma = 3;
      r.applicable = false;
      r.detail = "direction bound is defined for l1 only";
      reports.push_back(r);
    }
  }
  Json list = Json::array();
  bool ok = true;
  for (const LemmaReport& r : reports) {
    ok = ok && r.holds;
    list.push_back(lemma_json(r));
  }
  Json j;
  j["name"] = s.name;
  j["metric"] = std::string(to_string(s.metric));
  j["holds"] = ok;
  j["reports"] = std::move(list);
  emit(j);
  return ok ? 0 : kExitMismatch;
}

int cmd_search(std::size_t points, std::size_t trials, std::uint64_t seed,
               const std::string& generator, unsigned threads) {
  std::vector<Generator> generators;
  if (generator == "both") {
    generators = {Generator::kRandomStaircase, Generator::kRandomSimple};
  } else {
    generators = {parse_generator(generator)};
  }
  Json runs = Json::array();
  std::size_t successes = 0, best = 0;
  for (Generator g : generators) {
    SearchConfig config{points, trials, seed, g, threads};
    SearchSummary summary = search_no_shatter(config);
    successes += summary.successes;
    best = std::max(best, summary.best_signature_count);
    runs.push_back({{"generator", std::string(to_string(g))},
                    {"trials", summary.trials},
                    {"successes", summary.successes},
                    {"topLayerSuccesses", summary.top_layer_successes},
                    {"bestSignatureCount", summary.best_signature_count},
                    {"bestTrial", summary.best_trial},
                    {"bestScenario", Json::parse(serialize_scenario(summary.best_scenario))}});
  }
  Json j;
  j["pointCount"] = points;
  j["trials"] = trials;
  j["seed"] = seed;
  j["successes"] = successes;
  j["bestSignatureCount"] = best;
  j["runs"] = std::move(runs);
  emit(j);
  return points >= 6 && successes > 0 ? kExitMismatch : 0;
}

int cmd_render(const Scenario& s, const std::string& output, bool labels, unsigned threads) {
  FaceDecomposition dec = signature_map(s.polygon, s.points, s.metric, {threads, false});
  std::ofstream out(output, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + output);
  RenderOptions options;
  options.signature_labels = labels;
  render_svg(dec, s.points, out, options);
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vcvis: exact L1/L2 visibility and shattering toolkit"};
  app.require_subcommand(1);
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  std::string file;
  auto with_file = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "scenario JSON")->required();
    return sub;
  };
  CLI::App* validate = with_file("validate", "check polygon and points");
  CLI::App* cuts = with_file("cuts", "list L1 cuts");
  CLI::App* faces = with_file("faces", "list decomposition faces and adjacency");
  CLI::App* signatures = with_file("signatures", "signature of every face");
  CLI::App* visible = with_file("visible", "test visibility between two points");
  std::string from, to, metric;
  visible->add_option("--from", from, "X,Y")->required();
  visible->add_option("--to", to, "X,Y")->required();
  visible->add_option("--metric", metric, "l1 or l2 (default: scenario metric)")
      ->check(CLI::IsMember({"l1", "l2"}));
  CLI::App* shatter = with_file("shatter", "decide whether the points are shattered");
  CLI::App* verify = with_file("verify", "check the structural lemmas");
  std::string lemma = "all";
  verify->add_option("--lemma", lemma, "1, 2, 3 or all")
      ->check(CLI::IsMember({"1", "2", "3", "all"}));
  CLI::App* render = with_file("render", "write an SVG of the signature map");
  std::string output;
  bool labels = false;
  render->add_option("-o,--output", output, "SVG path")->required();
  render->add_flag("--labels", labels, "print signatures inside faces");

  CLI::App* search = app.add_subcommand("search", "random search for shattered point sets");
  std::size_t points = 6, trials = 100;
  std::uint64_t seed = 0;
  std::string generator = "both";
  search->add_option("--points", points, "points per scenario")->check(CLI::Range(1, 20));
  search->add_option("--trials", trials, "trials per generator")->check(CLI::PositiveNumber);
  search->add_option("--seed", seed, "random seed")->envname("VCVIS_SEED");
  search->add_option("--generator", generator, "staircase, simple, mutate or both")
      ->check(CLI::IsMember({"staircase", "simple", "mutate", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (search->parsed()) return cmd_search(points, trials, seed, generator, threads);
    Scenario s = load_scenario(file);
    if (validate->parsed()) return cmd_validate(s);
    if (cuts->parsed()) return cmd_cuts(s);
    if (faces->parsed()) return cmd_faces(s);
    if (signatures->parsed()) return cmd_signatures(s, threads);
    if (visible->parsed()) return cmd_visible(s, from, to, metric);
    if (shatter->parsed()) return cmd_shatter(s, threads);
    if (verify->parsed()) return cmd_verify(s, lemma, threads);
    if (render->parsed()) return cmd_render(s, output, labels, threads);
  } catch (const Error& e) {
    std::cerr << "vcvis: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "vcvis: internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
