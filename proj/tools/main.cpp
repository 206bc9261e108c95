#include "opcal/cli.hpp"

int main(int argc, char** argv) { return opcal::cli::main(argc, argv); }
