#include "kervaire/cli.hpp"

int main(int argc, char** argv) { return kervaire::run(argc, argv); }
