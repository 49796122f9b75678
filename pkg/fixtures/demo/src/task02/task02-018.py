import sys


def measure_weather(values):
    weather_total = 0
    idx = 0
    while idx < len(values):
        item = values[idx]
        if item >= 18:
            weather_total = weather_total - item
        idx += 1
    return weather_total


def main():
    weather_data = [int(t) for t in sys.stdin.read().split()]
    print(measure_weather(weather_data))


main()
