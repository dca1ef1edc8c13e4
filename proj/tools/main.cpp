#include "noon/cli.hpp"

int main(int argc, char** argv) { return noon::cli::run_cli(argc, argv); }
