#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "morifan/divisor.hpp"
#include "morifan/fixtures.hpp"
#include "morifan/json_io.hpp"
#include "morifan/slice.hpp"

namespace {

using namespace morifan;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::Parse: return 2;
    case Errc::NotEffective: return 4;
    default: return 3;
  }
}

RatVec parse_divisor(const std::string& s) {
  RatVec v;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    v.push_back(parse_rat(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return v;
}

std::vector<IntVec> parse_vector_list(const std::string& s) {
  std::vector<IntVec> vs;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t colon = s.find(':', pos);
    std::string tok = s.substr(pos, colon == std::string::npos ? std::string::npos : colon - pos);
    vs.push_back(primitive(parse_divisor(tok)));
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  return vs;
}

WeightSystem load_ws(const std::string& input, const std::string& fixture_name) {
  if (!input.empty() && !fixture_name.empty())
    throw Error(Errc::Parse, "give either an input file or --fixture, not both");
  if (!input.empty()) return parse_weight_system_text(read_file(input));
  if (!fixture_name.empty()) return fixture(fixture_name);
  throw Error(Errc::Parse, "no input: pass a weight-system file or --fixture NAME");
}

void emit(const Json& j) { std::cout << canonical_text(j); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Mori-chamber fans, GIT (semi)stability and Zariski decompositions\n"
               "for torus-graded polynomial Cox rings"};
  app.require_subcommand(1);

  std::string input, fixture_name, divisor_str, map_file, fixture_map_name, svg_path, subspace_str,
      region_str;
  std::uint64_t ceiling = 1000000;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "weight-system JSON file");
    cmd->add_option("--fixture", fixture_name, "built-in fixture name");
  };
  auto add_divisor = [&](CLI::App* cmd) {
    cmd->add_option("-d,--divisor", divisor_str, "comma-separated rational coordinates")->required();
  };

  auto* cmd_fan = app.add_subcommand("fan", "GIT fan of the effective cone");
  add_input(cmd_fan);

  auto* cmd_zariski = app.add_subcommand("zariski", "Zariski decomposition of a divisor class");
  add_input(cmd_zariski);
  add_divisor(cmd_zariski);

  auto* cmd_chamber = app.add_subcommand("chamber", "fan cone containing a divisor class");
  add_input(cmd_chamber);
  add_divisor(cmd_chamber);

  auto* cmd_h0 = app.add_subcommand("h0", "dimension of the space of global sections");
  add_input(cmd_h0);
  add_divisor(cmd_h0);
  cmd_h0->add_option("--ceiling", ceiling, "abort once this many sections are counted");

  auto* cmd_signature = app.add_subcommand("signature", "semistable/stable supports of a character");
  add_input(cmd_signature);
  add_divisor(cmd_signature);

  auto* cmd_verify = app.add_subcommand("verify", "compare a target fan with the restricted source fan");
  std::vector<std::string> verify_paths;
  cmd_verify->add_option("files", verify_paths, "X.json Y.json MAP.json")->expected(0, 3);
  cmd_verify->add_option("--fixture-map", fixture_map_name, "built-in map name, e.g. bl2p3->bl1p3");

  auto* cmd_restrict = app.add_subcommand("restrict", "fan of a region, optionally restricted to a subspace");
  add_input(cmd_restrict);
  cmd_restrict->add_option("--map", map_file, "pullback-map JSON file");
  cmd_restrict->add_option("--fixture-map", fixture_map_name, "built-in map name");
  cmd_restrict->add_option("--region", region_str, "region generators, e.g. 1,1,0:1,0,1");

  auto* cmd_slice = app.add_subcommand("slice", "2D cross-section of a rank-3 fan");
  add_input(cmd_slice);
  cmd_slice->add_option("--svg", svg_path, "also write an SVG rendering to this path");
  cmd_slice->add_option("--subspace", subspace_str, "overlay subspace, e.g. 1,0,0:0,1,0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_fan->parsed()) {
      emit(fan_json(git_fan(load_ws(input, fixture_name))));
    } else if (cmd_zariski->parsed()) {
      WeightSystem ws = load_ws(input, fixture_name);
      emit(zariski_json(zariski(ws, parse_divisor(divisor_str)), ws.rank()));
    } else if (cmd_chamber->parsed()) {
      WeightSystem ws = load_ws(input, fixture_name);
      emit(chamber_json(chamber_info(ws, parse_divisor(divisor_str)), ws.rank()));
    } else if (cmd_h0->parsed()) {
      WeightSystem ws = load_ws(input, fixture_name);
      Json j;
      j["h0"] = h0(ws, parse_divisor(divisor_str), ceiling);
      emit(j);
    } else if (cmd_signature->parsed()) {
      WeightSystem ws = load_ws(input, fixture_name);
      emit(signature_json(signature(ws, parse_divisor(divisor_str)), ws.size()));
    } else if (cmd_verify->parsed()) {
      RestrictionReport rep;
      if (!fixture_map_name.empty()) {
        const FixtureMap& fm = fixture_map(fixture_map_name);
        if (fm.y.empty())  // subspace-only target: compare against the golden fan
          rep = compare_fans(z2quot_golden_fan(), restrict_fan(git_fan(fixture(fm.x)), fm.map));
        else
          rep = verify_restriction(fixture(fm.x), fixture(fm.y), fm.map);
      } else if (verify_paths.size() == 3) {
        WeightSystem x = parse_weight_system_text(read_file(verify_paths[0]));
        WeightSystem y = parse_weight_system_text(read_file(verify_paths[1]));
        PullbackMap f = parse_pullback_map_text(read_file(verify_paths[2]));
        rep = verify_restriction(x, y, f);
      } else {
        throw Error(Errc::Parse, "verify needs X.json Y.json MAP.json or --fixture-map NAME");
      }
      emit(report_json(rep));
      return rep.pass ? 0 : 5;
    } else if (cmd_restrict->parsed()) {
      std::optional<PullbackMap> f;
      if (!map_file.empty()) f = parse_pullback_map_text(read_file(map_file));
      if (!fixture_map_name.empty()) {
        const FixtureMap& fm = fixture_map(fixture_map_name);
        f = fm.map;
        if (input.empty() && fixture_name.empty()) fixture_name = fm.x;
      }
      WeightSystem ws = load_ws(input, fixture_name);
      Cone region = effective_cone(ws);
      if (!region_str.empty())
        region = cone_from_generators(ws.rank(), parse_vector_list(region_str));
      emit(fan_json(restrict_region_fan(ws, region, f ? &*f : nullptr)));
    } else if (cmd_slice->parsed()) {
      WeightSystem ws = load_ws(input, fixture_name);
      std::optional<std::vector<IntVec>> subspace;
      if (!subspace_str.empty()) subspace = parse_vector_list(subspace_str);
      SliceDoc doc = slice_fan(ws, subspace ? &*subspace : nullptr);
      if (!svg_path.empty()) write_file(svg_path, slice_svg(doc));
      emit(slice_json(doc));
    }
  } catch (const Error& e) {
    std::cerr << "morifan: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "morifan: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
