#include "twofrac/cli.hpp"

int main(int argc, char** argv) { return twofrac::dispatch(argc, argv); }
