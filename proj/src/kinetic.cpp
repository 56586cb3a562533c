#include "vlr/kinetic.hpp"
