#include "relab/cli/cli.hpp"

int main(int argc, char** argv) { return relab::cli::run(argc, argv); }
