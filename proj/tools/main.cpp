#include "taftcross/cli.hpp"

int main(int argc, char** argv) { return taftcross::cli_main(argc, argv); }
