#pragma once

#define SIEGELTHETA_VERSION_MAJOR 0
#define SIEGELTHETA_VERSION_MINOR 1
#define SIEGELTHETA_VERSION_PATCH 0
#define SIEGELTHETA_VERSION "0.1.0"
