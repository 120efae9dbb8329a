#include "indset/cli.hpp"

int main(int argc, char** argv) { return indset::cli::run_main(argc, argv); }
