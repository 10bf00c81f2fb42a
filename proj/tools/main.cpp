#include "riskset_cli.hpp"

int main(int argc, char** argv) { return riskset::cli::main_with_args(argc, argv); }
