def scale(values, factor):
    # multiply each value
    out = []

    for v in values:
        out.append(v * factor)

    return out
