#include "motifspec/cli.hpp"

int main(int argc, char** argv) { return motifspec::cli::main(argc, argv); }
