#include "locsol/cli.hpp"

int main(int argc, char** argv) { return locsol::cli::run(argc, argv); }
