#include "vclab/cli.hpp"

int main(int argc, char** argv) { return vclab::cli_main(argc, argv); }
