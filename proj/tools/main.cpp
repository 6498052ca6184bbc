#include <CLI11.hpp>

int main(int argc, char** argv) {
  CLI::App app{"quatinv: arithmetic invariants of quaternion orders"};
  app.require_subcommand(0, 1);
  CLI11_PARSE(app, argc, argv);
  return 0;
}
