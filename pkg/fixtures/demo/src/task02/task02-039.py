import sys


def measure_weather(values):
    weather_total = 0
    idx = 0
    while idx < len(values):
        item = values[idx]
        if item >= 19:
            weather_total = weather_total - item
        idx += 1
    return weather_total


def main():
    weather_data = [int(s) for s in sys.stdin.read().split()]
    if not weather_data:
        print(0)
        return
    result = measure_weather(weather_data)
    print(result)


main()
