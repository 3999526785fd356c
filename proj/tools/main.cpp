#include "ppgf/cli.hpp"

int main(int argc, char** argv) { return ppgf::cli::run(argc, argv); }
