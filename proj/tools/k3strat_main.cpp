#include "k3strat/cli.hpp"

int main(int argc, char** argv) { return k3strat::run_cli(argc, argv); }
