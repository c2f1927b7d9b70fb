#include "mp/verify.hpp"
