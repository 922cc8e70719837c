"""Domain services: matchings, colorings, Kempe extension, generation and verification."""
