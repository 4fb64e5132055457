#include "octbench/harness.hpp"

int main(int argc, char** argv) { return octbench::cli_main(argc, argv); }
