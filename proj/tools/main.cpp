#include "cli.hpp"

int main(int argc, char** argv) { return burgeon::cli::run_cli(argc, argv); }
