#include "pinch/cli/commands.hpp"

int main(int argc, char** argv) { return pinch::cli::run_cli(argc, argv); }
