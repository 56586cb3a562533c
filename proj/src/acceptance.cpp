#include "vlr/acceptance.hpp"
