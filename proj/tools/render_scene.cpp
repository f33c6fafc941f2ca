// Writes the built-in synthetic test scenes as PGM files.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ancc/pgm.hpp"
#include "ancc/synth.hpp"

int main(int argc, char** argv) {
  std::string scene;
  std::string out_path;
  CLI::App app{"Render a synthetic test scene", "ancc-render"};
  app.add_option("--scene", scene, "Scene name")
      ->required()
      ->check(CLI::IsMember({"testcase1", "testcase2"}));
  app.add_option("--out", out_path, "Output PGM")->required();
  CLI11_PARSE(app, argc, argv);

  const auto test = scene == "testcase1" ? ancc::synth::testcase1() : ancc::synth::testcase2();
  try {
    ancc::save_pgm(ancc::synth::render(test.spec), out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  std::cout << out_path << ": expect " << test.expected_objects << " objects\n";
  return 0;
}
