#include "mvlab/cli.hpp"

int main(int argc, char** argv) { return mvlab::run_command(argc, argv); }
