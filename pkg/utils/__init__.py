"""Foundation: graph type, formats, certificates, errors, parallel map and the action log."""
