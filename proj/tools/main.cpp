#include "cli.hpp"

int main(int argc, char** argv) { return whh::cli::run_cli(argc, argv); }
