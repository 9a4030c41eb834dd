"""Maximum orders of extendable finite group actions on surfaces in R^3."""
