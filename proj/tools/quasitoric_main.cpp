#include "quasitoric/cli.hpp"

int main(int argc, char** argv) { return quasitoric::run_cli(argc, argv); }
