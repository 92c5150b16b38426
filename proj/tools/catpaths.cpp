#include "catpaths/cli.hpp"

int main(int argc, char **argv) { return catpaths::run_cli(argc, argv); }
